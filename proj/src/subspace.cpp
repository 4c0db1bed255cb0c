#include "dgin/subspace.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "dgin/errors.hpp"
#include "dgin/extorder.hpp"

namespace dgin {

HomogeneousPolynomial::HomogeneousPolynomial(int nvars, int degree)
    : nvars_(nvars), degree_(degree) {
  if (nvars < 1) throw DimensionError("polynomial needs at least one variable");
  if (degree < 0) throw DimensionError("polynomial degree must be nonnegative");
}

HomogeneousPolynomial::HomogeneousPolynomial(int nvars, int degree, TermMap terms)
    : HomogeneousPolynomial(nvars, degree) {
  for (auto it = terms.begin(); it != terms.end();) {
    if (it->first.nvars() != nvars)
      throw DimensionError("polynomial term has the wrong variable count");
    if (it->first.degree() != degree)
      throw DimensionError("polynomial term of degree " + std::to_string(it->first.degree()) +
                           " in a degree-" + std::to_string(degree) + " polynomial");
    if (it->second == 0)
      it = terms.erase(it);
    else
      ++it;
  }
  terms_ = std::move(terms);
}

HomogeneousPolynomial HomogeneousPolynomial::from_monomial(const Monomial& m, const Rational& c) {
  TermMap terms;
  if (c != 0) terms.emplace(m, c);
  return HomogeneousPolynomial(m.nvars(), m.degree(), std::move(terms));
}

Rational HomogeneousPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Monomial HomogeneousPolynomial::leading_monomial(const TermOrder& order) const {
  if (terms_.empty()) throw DimensionError("the zero polynomial has no leading monomial");
  const Monomial* best = nullptr;
  for (const auto& [m, c] : terms_)
    if (best == nullptr || order.greater(m, *best)) best = &m;
  return *best;
}

HomogeneousPolynomial HomogeneousPolynomial::operator+(const HomogeneousPolynomial& other) const {
  if (nvars_ != other.nvars_ || degree_ != other.degree_)
    throw DimensionError("polynomial shapes do not match");
  TermMap out = terms_;
  for (const auto& [m, c] : other.terms_) {
    auto [it, fresh] = out.emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) out.erase(it);
    }
  }
  return HomogeneousPolynomial(nvars_, degree_, std::move(out));
}

HomogeneousPolynomial HomogeneousPolynomial::operator-(const HomogeneousPolynomial& other) const {
  return *this + other.scaled(Rational(-1));
}

HomogeneousPolynomial HomogeneousPolynomial::operator*(const HomogeneousPolynomial& other) const {
  if (nvars_ != other.nvars_) throw DimensionError("polynomial variable counts do not match");
  TermMap out;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : other.terms_) {
      Monomial prod = ma * mb;
      auto [it, fresh] = out.emplace(prod, ca * cb);
      if (!fresh) it->second += ca * cb;
    }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return HomogeneousPolynomial(nvars_, degree_ + other.degree_, std::move(out));
}

HomogeneousPolynomial HomogeneousPolynomial::scaled(const Rational& c) const {
  TermMap out;
  if (c != 0)
    for (const auto& [m, v] : terms_) out.emplace(m, v * c);
  return HomogeneousPolynomial(nvars_, degree_, std::move(out));
}

HomogeneousPolynomial HomogeneousPolynomial::times(const Monomial& m) const {
  if (m.nvars() != nvars_) throw DimensionError("monomial variable count does not match");
  TermMap out;
  for (const auto& [mono, c] : terms_) out.emplace(mono * m, c);
  return HomogeneousPolynomial(nvars_, degree_ + m.degree(), std::move(out));
}

bool HomogeneousPolynomial::operator==(const HomogeneousPolynomial& other) const {
  return nvars_ == other.nvars_ && degree_ == other.degree_ && terms_ == other.terms_;
}

GLMatrix::GLMatrix(int nvars, std::vector<std::vector<Rational>> entries)
    : nvars_(nvars), entries_(std::move(entries)) {
  if (nvars < 1) throw DimensionError("matrix needs at least one variable");
  if (entries_.size() != static_cast<std::size_t>(nvars))
    throw DimensionError("matrix row count does not match the variable count");
  for (const auto& row : entries_)
    if (row.size() != static_cast<std::size_t>(nvars))
      throw DimensionError("matrix is not square");
  RationalMatrix m(static_cast<std::size_t>(nvars), static_cast<std::size_t>(nvars));
  for (int i = 0; i < nvars; ++i)
    for (int j = 0; j < nvars; ++j) m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = entries_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  if (m.determinant() == 0)
    throw AdmissibilityError("singular matrix is not a change of coordinates");
}

GLMatrix GLMatrix::identity(int nvars) {
  std::vector<std::vector<Rational>> entries(static_cast<std::size_t>(nvars),
                                             std::vector<Rational>(static_cast<std::size_t>(nvars), Rational(0)));
  for (int i = 0; i < nvars; ++i) entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return GLMatrix(nvars, std::move(entries));
}

const Rational& GLMatrix::entry(int i, int j) const {
  return entries_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

RandomGlSource::RandomGlSource(std::uint64_t seed, long amplitude)
    : rng_(seed), amplitude_(amplitude) {
  if (amplitude < 1) throw DimensionError("entry amplitude must be positive");
}

GLMatrix RandomGlSource::next(int nvars) {
  for (;;) {
    std::vector<std::vector<Rational>> entries(static_cast<std::size_t>(nvars));
    RationalMatrix m(static_cast<std::size_t>(nvars), static_cast<std::size_t>(nvars));
    for (int i = 0; i < nvars; ++i) {
      entries[static_cast<std::size_t>(i)].reserve(static_cast<std::size_t>(nvars));
      for (int j = 0; j < nvars; ++j) {
        Rational value(static_cast<long>(rng_.between(-amplitude_, amplitude_)));
        m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = value;
        entries[static_cast<std::size_t>(i)].push_back(std::move(value));
      }
    }
    if (m.determinant() != 0) return GLMatrix(nvars, std::move(entries));
  }
}

Subspace::Subspace(int nvars, int degree, std::vector<HomogeneousPolynomial> basis)
    : nvars_(nvars), degree_(degree), basis_(std::move(basis)) {
  if (basis_.empty()) throw DimensionError("subspace needs at least one basis polynomial");
  for (const HomogeneousPolynomial& f : basis_)
    if (f.nvars() != nvars || f.degree() != degree)
      throw DimensionError("basis polynomial shape does not match the subspace");
  std::vector<Monomial> support;
  for (const HomogeneousPolynomial& f : basis_)
    for (const auto& [m, c] : f.terms()) support.push_back(m);
  std::sort(support.begin(), support.end(), MonomialTupleLess{});
  support.erase(std::unique(support.begin(), support.end()), support.end());
  RationalMatrix m(basis_.size(), support.size());
  for (std::size_t r = 0; r < basis_.size(); ++r)
    for (const auto& [mono, c] : basis_[r].terms()) {
      auto it = std::lower_bound(support.begin(), support.end(), mono, MonomialTupleLess{});
      m.at(r, static_cast<std::size_t>(it - support.begin())) = c;
    }
  if (m.rank() != basis_.size())
    throw DimensionError("basis polynomials are linearly dependent");
}

Subspace Subspace::span(const DegreeSlice& slice) {
  if (slice.empty()) throw DimensionError("cannot span the empty slice");
  std::vector<HomogeneousPolynomial> basis;
  basis.reserve(static_cast<std::size_t>(slice.size()));
  for (const Monomial& m : slice.monomials()) basis.push_back(HomogeneousPolynomial::from_monomial(m));
  return Subspace(slice.nvars(), slice.degree(), std::move(basis));
}

namespace {

// Coefficient matrix of the basis with columns descending under the order.
struct SupportMatrix {
  std::vector<Monomial> columns;  // descending
  RationalMatrix matrix;
  std::vector<std::size_t> pivots;
};

SupportMatrix reduced_matrix(const Subspace& v, const TermOrder& order) {
  std::vector<Monomial> cols;
  for (const HomogeneousPolynomial& f : v.basis())
    for (const auto& [m, c] : f.terms()) cols.push_back(m);
  std::sort(cols.begin(), cols.end(), OrderGreater{&order});
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  RationalMatrix m(static_cast<std::size_t>(v.dim()), cols.size());
  for (std::size_t r = 0; r < static_cast<std::size_t>(v.dim()); ++r)
    for (const auto& [mono, c] : v.basis()[r].terms()) {
      auto it = std::lower_bound(cols.begin(), cols.end(), mono, OrderGreater{&order});
      m.at(r, static_cast<std::size_t>(it - cols.begin())) = c;
    }
  std::vector<std::size_t> pivots = m.reduce();
  return SupportMatrix{std::move(cols), std::move(m), std::move(pivots)};
}

} // namespace

Subspace rref_basis(const Subspace& v, const TermOrder& order) {
  SupportMatrix sm = reduced_matrix(v, order);
  std::vector<HomogeneousPolynomial> basis;
  basis.reserve(sm.pivots.size());
  for (std::size_t r = 0; r < sm.pivots.size(); ++r) {
    HomogeneousPolynomial::TermMap terms;
    for (std::size_t c = 0; c < sm.columns.size(); ++c)
      if (sm.matrix.at(r, c) != 0) terms.emplace(sm.columns[c], sm.matrix.at(r, c));
    basis.emplace_back(v.nvars(), v.degree(), std::move(terms));
  }
  return Subspace(v.nvars(), v.degree(), std::move(basis));
}

DegreeSlice initial_extensor(const Subspace& v, const TermOrder& order) {
  SupportMatrix sm = reduced_matrix(v, order);
  std::vector<Monomial> leading;
  leading.reserve(sm.pivots.size());
  for (std::size_t p : sm.pivots) leading.push_back(sm.columns[p]);
  return DegreeSlice(v.nvars(), v.degree(), std::move(leading));
}

namespace {

using SubstitutionCache = std::map<Monomial, HomogeneousPolynomial, MonomialTupleLess>;

HomogeneousPolynomial substitute(const GLMatrix& g, const Monomial& m, SubstitutionCache& cache) {
  auto hit = cache.find(m);
  if (hit != cache.end()) return hit->second;
  HomogeneousPolynomial out = HomogeneousPolynomial::from_monomial(Monomial(m.nvars()));
  for (int i = 0; i < m.nvars(); ++i) {
    if (m.exponent(i) == 0) continue;
    HomogeneousPolynomial::TermMap linear;
    for (int j = 0; j < m.nvars(); ++j)
      if (g.entry(i, j) != 0) linear.emplace(Monomial::variable(m.nvars(), j), g.entry(i, j));
    HomogeneousPolynomial image(m.nvars(), 1, std::move(linear));
    for (int e = 0; e < m.exponent(i); ++e) out = out * image;
  }
  cache.emplace(m, out);
  return out;
}

HomogeneousPolynomial substitute_all(const GLMatrix& g, const HomogeneousPolynomial& f,
                                     SubstitutionCache& cache) {
  HomogeneousPolynomial out(f.nvars(), f.degree());
  for (const auto& [m, c] : f.terms()) out = out + substitute(g, m, cache).scaled(c);
  return out;
}

} // namespace

HomogeneousPolynomial apply_gl(const GLMatrix& g, const HomogeneousPolynomial& f) {
  if (g.nvars() != f.nvars()) throw DimensionError("matrix variable count does not match");
  SubstitutionCache cache;
  return substitute_all(g, f, cache);
}

Subspace apply_gl(const GLMatrix& g, const Subspace& v) {
  if (g.nvars() != v.nvars()) throw DimensionError("matrix variable count does not match");
  SubstitutionCache cache;
  std::vector<HomogeneousPolynomial> basis;
  basis.reserve(static_cast<std::size_t>(v.dim()));
  for (const HomogeneousPolynomial& f : v.basis()) basis.push_back(substitute_all(g, f, cache));
  return Subspace(v.nvars(), v.degree(), std::move(basis));
}

namespace {

constexpr int kMaxRounds = 6;

} // namespace

DegreeSlice generic_initial_extensor(const Subspace& v, const TermOrder& order, GlSource& source,
                                     int trials) {
  if (trials < 2) throw DimensionError("at least two trials are needed for the certificate");
  std::vector<DegreeSlice> seen;
  long total_draws = 0;
  int batch = trials;
  for (int round = 0; round < kMaxRounds; ++round) {
    for (int i = 0; i < batch; ++i) {
      seen.push_back(initial_extensor(apply_gl(source.next(v.nvars()), v), order));
      ++total_draws;
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < seen.size(); ++i)
      if (eisenbud_compare(order, seen[i], seen[best]) > 0) best = i;
    int hits = 0;
    for (const DegreeSlice& s : seen)
      if (s == seen[best]) ++hits;
    if (hits >= 2 && seen[best].is_borel_closed()) return seen[best];
    batch *= 2;
  }
  throw GenericityError("no certified generic initial extensor after " +
                        std::to_string(total_draws) + " draws");
}

DegreeSlice generic_initial_extensor(const Subspace& v, const TermOrder& order, std::uint64_t seed,
                                     int trials) {
  RandomGlSource source(seed);
  return generic_initial_extensor(v, order, source, trials);
}

std::vector<DegreeSlice> delta_support(const Subspace& v, const TermOrder& order, long budget) {
  const int q = v.dim();
  Integer ambient = binomial(v.nvars() - 1 + v.degree(), v.nvars() - 1);
  if (!ambient.fits_slong_p())
    throw ResourceError("Delta support over a slice of dimension " + to_string(ambient) +
                        " is out of reach");
  Integer subsets = binomial(ambient.get_si(), q);
  if (subsets > budget)
    throw ResourceError("Delta support would scan " + to_string(subsets) +
                        " minors, above the budget of " + std::to_string(budget));
  SupportMatrix sm = reduced_matrix(v, order);
  const std::size_t ncols = sm.columns.size();

  std::vector<DegreeSlice> out;
  std::vector<std::size_t> chosen;
  std::vector<EchelonBasis> stack{EchelonBasis(static_cast<std::size_t>(q))};
  // Depth-first over column subsets in descending order; a subset survives
  // only while its chosen columns stay independent.
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (chosen.size() == static_cast<std::size_t>(q)) {
      std::vector<Monomial> members;
      members.reserve(chosen.size());
      for (std::size_t c : chosen) members.push_back(sm.columns[c]);
      out.emplace_back(v.nvars(), v.degree(), std::move(members));
      return;
    }
    for (std::size_t c = start; c + (static_cast<std::size_t>(q) - chosen.size()) <= ncols; ++c) {
      std::vector<Rational> column(static_cast<std::size_t>(q), Rational(0));
      for (std::size_t r = 0; r < static_cast<std::size_t>(q); ++r) column[r] = sm.matrix.at(r, c);
      EchelonBasis extended = stack.back();
      if (!extended.insert(std::move(column))) continue;
      stack.push_back(std::move(extended));
      chosen.push_back(c);
      self(self, c + 1);
      chosen.pop_back();
      stack.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<long long> ideal_hilbert_function(const Subspace& v, long t_max) {
  const int m = v.degree();
  if (t_max < m) throw DimensionError("degree bound below the subspace degree");
  auto sorted_monomials = [&v](int degree) {
    std::vector<Monomial> cols = all_monomials(v.nvars(), degree);
    std::sort(cols.begin(), cols.end(), MonomialTupleLess{});
    return cols;
  };
  auto index_of = [](const std::vector<Monomial>& cols, const Monomial& mono) {
    auto it = std::lower_bound(cols.begin(), cols.end(), mono, MonomialTupleLess{});
    return static_cast<std::size_t>(it - cols.begin());
  };

  std::vector<long long> dims;
  std::vector<Monomial> cols = sorted_monomials(m);
  EchelonBasis ech(cols.size());
  for (const HomogeneousPolynomial& f : v.basis()) {
    std::vector<Rational> row(cols.size(), Rational(0));
    for (const auto& [mono, c] : f.terms()) row[index_of(cols, mono)] = c;
    ech.insert(std::move(row));
  }
  dims.push_back(static_cast<long long>(ech.size()));

  for (long t = m + 1; t <= t_max; ++t) {
    std::vector<Monomial> next_cols = sorted_monomials(static_cast<int>(t));
    EchelonBasis next(next_cols.size());
    for (const std::vector<Rational>& row : ech.rows())
      for (int k = 0; k < v.nvars(); ++k) {
        Monomial var = Monomial::variable(v.nvars(), k);
        std::vector<Rational> prod(next_cols.size(), Rational(0));
        for (std::size_t c = 0; c < cols.size(); ++c)
          if (row[c] != 0) prod[index_of(next_cols, cols[c] * var)] = row[c];
        next.insert(std::move(prod));
      }
    dims.push_back(static_cast<long long>(next.size()));
    cols = std::move(next_cols);
    ech = std::move(next);
  }
  return dims;
}

namespace {

// Leading-term slices of the transformed ideal, degree by degree.
std::vector<DegreeSlice> degreewise_initial(const std::vector<HomogeneousPolynomial>& gens,
                                            const GLMatrix& g, const TermOrder& order,
                                            int degree_bound) {
  const int nvars = gens.front().nvars();
  SubstitutionCache cache;
  std::vector<HomogeneousPolynomial> moved;
  moved.reserve(gens.size());
  for (const HomogeneousPolynomial& f : gens) moved.push_back(substitute_all(g, f, cache));

  int lowest = degree_bound;
  for (const HomogeneousPolynomial& f : moved) lowest = std::min(lowest, f.degree());

  std::vector<DegreeSlice> slices;
  for (int t = lowest; t <= degree_bound; ++t) {
    std::vector<Monomial> cols = all_monomials(nvars, t);
    std::sort(cols.begin(), cols.end(), OrderGreater{&order});
    auto index_of = [&cols, &order](const Monomial& mono) {
      auto it = std::lower_bound(cols.begin(), cols.end(), mono, OrderGreater{&order});
      return static_cast<std::size_t>(it - cols.begin());
    };
    EchelonBasis ech(cols.size());
    for (const HomogeneousPolynomial& f : moved) {
      if (f.degree() > t) continue;
      for (const Monomial& mu : all_monomials(nvars, t - f.degree())) {
        HomogeneousPolynomial prod = f.times(mu);
        std::vector<Rational> row(cols.size(), Rational(0));
        for (const auto& [mono, c] : prod.terms()) row[index_of(mono)] = c;
        ech.insert(std::move(row));
      }
    }
    std::vector<Monomial> leading;
    leading.reserve(ech.size());
    for (std::size_t p : ech.pivots()) leading.push_back(cols[p]);
    slices.emplace_back(nvars, t, std::move(leading));
  }
  return slices;
}

int compare_slice_lists(const TermOrder& order, const std::vector<DegreeSlice>& a,
                        const std::vector<DegreeSlice>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    int c = eisenbud_compare(order, a[i], b[i]);
    if (c != 0) return c;
  }
  return 0;
}

} // namespace

MonomialIdeal gin_ideal(const std::vector<HomogeneousPolynomial>& gens, const TermOrder& order,
                        GlSource& source, int degree_bound, int trials) {
  if (gens.empty()) throw DimensionError("the generic initial ideal needs at least one generator");
  if (trials < 2) throw DimensionError("at least two trials are needed for the certificate");
  const int nvars = gens.front().nvars();
  int max_degree = 0;
  for (const HomogeneousPolynomial& f : gens) {
    if (f.nvars() != nvars) throw DimensionError("generators live in different variable counts");
    if (f.is_zero()) throw DimensionError("the zero polynomial cannot generate");
    max_degree = std::max(max_degree, f.degree());
  }
  if (degree_bound < max_degree)
    throw DimensionError("degree bound " + std::to_string(degree_bound) +
                         " is below the largest generator degree " + std::to_string(max_degree));

  std::vector<std::vector<DegreeSlice>> seen;
  long total_draws = 0;
  int batch = trials;
  for (int round = 0; round < kMaxRounds; ++round) {
    for (int i = 0; i < batch; ++i) {
      seen.push_back(degreewise_initial(gens, source.next(nvars), order, degree_bound));
      ++total_draws;
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < seen.size(); ++i)
      if (compare_slice_lists(order, seen[i], seen[best]) > 0) best = i;
    int hits = 0;
    for (const auto& s : seen)
      if (compare_slice_lists(order, s, seen[best]) == 0) ++hits;
    if (hits >= 2) {
      std::vector<Monomial> all;
      for (const DegreeSlice& s : seen[best])
        all.insert(all.end(), s.monomials().begin(), s.monomials().end());
      MonomialIdeal candidate(nvars, std::move(all));
      if (candidate.is_borel_fixed()) return candidate;
    }
    batch *= 2;
  }
  throw GenericityError("no certified generic initial ideal after " + std::to_string(total_draws) +
                        " draws");
}

MonomialIdeal gin_ideal(const std::vector<HomogeneousPolynomial>& gens, const TermOrder& order,
                        std::uint64_t seed, int degree_bound, int trials) {
  RandomGlSource source(seed);
  return gin_ideal(gens, order, source, degree_bound, trials);
}

namespace {

Rational parse_rational_number(const std::string& body, std::size_t& pos) {
  std::size_t start = pos;
  while (pos < body.size() && std::isdigit(static_cast<unsigned char>(body[pos]))) ++pos;
  if (pos == start) throw ParseError("expected a number", static_cast<long>(start));
  std::string num = body.substr(start, pos - start);
  std::string den = "1";
  if (pos < body.size() && body[pos] == '/') {
    ++pos;
    std::size_t dstart = pos;
    while (pos < body.size() && std::isdigit(static_cast<unsigned char>(body[pos]))) ++pos;
    if (pos == dstart) throw ParseError("expected a denominator", static_cast<long>(dstart));
    den = body.substr(dstart, pos - dstart);
  }
  Rational value{Integer(num), Integer(den)};
  if (value.get_den() == 0) throw ParseError("zero denominator", static_cast<long>(start));
  value.canonicalize();
  return value;
}

} // namespace

HomogeneousPolynomial parse_polynomial(const std::string& text, int nvars) {
  std::string s;
  s.reserve(text.size());
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw ParseError("empty polynomial");

  HomogeneousPolynomial::TermMap acc;
  int degree = -1;
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    }
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string body = s.substr(pos, end - pos);
    if (body.empty()) throw ParseError("empty term", static_cast<long>(pos));

    Rational coeff(1);
    std::string mono_text = body;
    if (std::isdigit(static_cast<unsigned char>(body[0]))) {
      std::size_t p = 0;
      coeff = parse_rational_number(body, p);
      if (p < body.size()) {
        if (body[p] != '*')
          throw ParseError("expected '*' between coefficient and monomial",
                           static_cast<long>(pos + p));
        mono_text = body.substr(p + 1);
        if (mono_text.empty()) throw ParseError("missing monomial after '*'", static_cast<long>(pos + p));
      } else {
        mono_text.clear();
      }
    }
    Monomial mono = mono_text.empty() ? Monomial(nvars) : parse_monomial(mono_text, nvars);
    if (degree < 0) degree = mono.degree();
    if (mono.degree() != degree)
      throw DimensionError("terms of degree " + std::to_string(mono.degree()) + " and " +
                           std::to_string(degree) + " in one polynomial");
    auto [it, fresh] = acc.emplace(mono, coeff * sign);
    if (!fresh) it->second += coeff * sign;
    pos = end;
  }
  for (auto it = acc.begin(); it != acc.end();)
    it = it->second == 0 ? acc.erase(it) : std::next(it);
  return HomogeneousPolynomial(nvars, degree, std::move(acc));
}

std::vector<HomogeneousPolynomial> parse_polynomial_list(const std::string& text, int nvars) {
  std::vector<HomogeneousPolynomial> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string::npos) end = text.size();
    out.push_back(parse_polynomial(text.substr(start, end - start), nvars));
    start = end + 1;
    if (end == text.size()) break;
  }
  return out;
}

Subspace parse_subspace(const std::string& text, int nvars) {
  std::vector<HomogeneousPolynomial> polys = parse_polynomial_list(text, nvars);
  const int degree = polys.front().degree();
  return Subspace(nvars, degree, std::move(polys));
}

std::string format_polynomial(const HomogeneousPolynomial& f, const TermOrder& order) {
  if (f.is_zero()) return "0";
  std::vector<Monomial> monos;
  monos.reserve(f.terms().size());
  for (const auto& [m, c] : f.terms()) monos.push_back(m);
  std::sort(monos.begin(), monos.end(), OrderGreater{&order});
  std::string out;
  bool first = true;
  for (const Monomial& m : monos) {
    Rational c = f.coefficient(m);
    bool negative = c < 0;
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    Rational mag = negative ? Rational(-c) : c;
    if (m.is_unit())
      out += to_string(mag);
    else if (mag == 1)
      out += format_monomial(m);
    else
      out += to_string(mag) + "*" + format_monomial(m);
  }
  return out;
}

} // namespace dgin
