#include "lspath/root_system.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "lspath/errors.hpp"

namespace lspath {

namespace {

void bond(IntMatrix& a, std::size_t i, std::size_t j, std::int64_t aij = -1,
          std::int64_t aji = -1) {
  a[i][j] = aij;
  a[j][i] = aji;
}

IntMatrix blank_cartan(std::size_t n) {
  IntMatrix a(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) a[i][i] = 2;
  return a;
}

// d_i with d_i a_ij = d_j a_ji, scaled so the shortest root in each
// connected component has d = 1.
std::vector<std::int64_t> symmetrizer(const IntMatrix& a) {
  const std::size_t n = a.size();
  std::vector<Rational> d(n, Rational(0));
  for (std::size_t start = 0; start < n; ++start) {
    if (d[start] != 0) continue;
    std::vector<std::size_t> component{start};
    d[start] = 1;
    for (std::size_t k = 0; k < component.size(); ++k) {
      const std::size_t i = component[k];
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || a[i][j] == 0) continue;
        if (a[j][i] == 0) throw InputError("Cartan matrix is not symmetrizable");
        Rational dj = d[i] * Rational(a[i][j], a[j][i]);
        if (d[j] == 0) {
          d[j] = dj;
          component.push_back(j);
        } else if (d[j] != dj) {
          throw InputError("Cartan matrix is not symmetrizable");
        }
      }
    }
    Rational smallest = d[start];
    for (auto i : component) smallest = std::min(smallest, d[i]);
    for (auto i : component) d[i] /= smallest;
  }
  std::vector<std::int64_t> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_integer(d[i]) || d[i] <= 0)
      throw InputError("Cartan matrix is not of finite type");
    out[i] = d[i].numerator();
  }
  return out;
}

}  // namespace

IntMatrix cartan_matrix(std::string_view type_label) {
  if (type_label.size() < 2)
    throw InputError("unknown root system type '" + std::string(type_label) + "'");
  const char series = type_label.front();
  int n = 0;
  auto digits = type_label.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || n <= 0)
    throw InputError("unknown root system type '" + std::string(type_label) + "'");

  const auto rank_error = [&](const char* allowed) {
    return InputError("rank out of range for type '" + std::string(type_label) +
                      "' (" + allowed + ")");
  };
  const std::size_t r = static_cast<std::size_t>(n);
  IntMatrix a = blank_cartan(r);
  switch (series) {
    case 'A':
      for (std::size_t i = 0; i + 1 < r; ++i) bond(a, i, i + 1);
      return a;
    case 'B':
      if (n < 2) throw rank_error("B_n needs n >= 2");
      for (std::size_t i = 0; i + 2 < r; ++i) bond(a, i, i + 1);
      bond(a, r - 2, r - 1, -1, -2);
      return a;
    case 'C':
      if (n < 2) throw rank_error("C_n needs n >= 2");
      for (std::size_t i = 0; i + 2 < r; ++i) bond(a, i, i + 1);
      bond(a, r - 2, r - 1, -2, -1);
      return a;
    case 'D':
      if (n < 4) throw rank_error("D_n needs n >= 4");
      for (std::size_t i = 0; i + 2 < r; ++i) bond(a, i, i + 1);
      bond(a, r - 3, r - 1);
      return a;
    case 'E':
      if (n < 6 || n > 8) throw rank_error("E_n needs 6 <= n <= 8");
      // 1-3-4-5-6-7-8 with 2 attached to 4
      bond(a, 0, 2);
      bond(a, 1, 3);
      for (std::size_t i = 2; i + 1 < r; ++i) bond(a, i, i + 1);
      return a;
    case 'F':
      if (n != 4) throw rank_error("only F4 exists");
      bond(a, 0, 1);
      bond(a, 1, 2, -1, -2);
      bond(a, 2, 3);
      return a;
    case 'G':
      if (n != 2) throw rank_error("only G2 exists");
      bond(a, 0, 1, -3, -1);
      return a;
    default:
      throw InputError("unknown root system type '" + std::string(type_label) +
                       "' (expected A-G followed by a rank)");
  }
}

RootSystem build_root_system(std::string_view type_label) {
  return RootSystem::from_cartan(std::string(type_label), cartan_matrix(type_label));
}

RootSystem RootSystem::from_cartan(std::string label, const IntMatrix& cartan) {
  RootSystem R;
  R.label_ = std::move(label);
  R.rank_ = cartan.size();
  R.cartan_ = cartan;
  for (std::size_t i = 0; i < R.rank_; ++i) {
    if (cartan[i].size() != R.rank_ || cartan[i][i] != 2)
      throw InputError("malformed Cartan matrix");
    for (std::size_t j = 0; j < R.rank_; ++j)
      if (i != j && cartan[i][j] > 0) throw InputError("malformed Cartan matrix");
  }
  R.half_lengths_ = symmetrizer(cartan);
  const std::size_t n = R.rank_;
  const auto& a = cartan;

  // Positive roots in simple-root coordinates, generated level by level with
  // the root-string criterion.
  std::vector<std::vector<std::int64_t>> roots;
  std::unordered_set<Weight, WeightHash> known;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::int64_t> e(n, 0);
    e[i] = 1;
    roots.push_back(e);
    known.insert(Weight(e));
  }
  std::size_t level_begin = 0;
  while (level_begin < roots.size()) {
    const std::size_t level_end = roots.size();
    for (std::size_t k = level_begin; k < level_end; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        const auto beta = roots[k];
        std::int64_t pair = 0;
        for (std::size_t j = 0; j < n; ++j) pair += a[i][j] * beta[j];
        std::int64_t q = 0;
        for (auto down = beta;;) {
          if (down[i] == 0) break;
          --down[i];
          if (!known.contains(Weight(down))) break;
          ++q;
        }
        if (q - pair <= 0) continue;
        auto up = beta;
        ++up[i];
        if (known.insert(Weight(up)).second) roots.push_back(up);
      }
    }
    level_begin = level_end;
  }
  std::stable_sort(roots.begin(), roots.end(), [](const auto& x, const auto& y) {
    return std::accumulate(x.begin(), x.end(), std::int64_t{0}) <
           std::accumulate(y.begin(), y.end(), std::int64_t{0});
  });

  for (const auto& beta : roots) {
    PositiveRoot root;
    root.coefficients = beta;
    root.weight = Weight(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) root.weight[i] += a[i][j] * beta[j];
    std::int64_t twice_norm = 0;  // <beta, beta>
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        twice_norm += beta[i] * beta[j] * R.half_lengths_[i] * a[i][j];
    root.half_length = twice_norm / 2;
    root.coroot.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
      const std::int64_t num = beta[j] * R.half_lengths_[j];
      if (num % root.half_length != 0)
        throw InvariantViolation("non-integral coroot coefficient");
      root.coroot[j] = num / root.half_length;
    }
    R.root_index_.emplace(root.weight, R.roots_.size());
    R.roots_.push_back(std::move(root));
  }

  RationalMatrix am(cartan);
  R.cartan_inverse_ = am.inverse();
  RationalMatrix d(n, n);
  for (std::size_t i = 0; i < n; ++i) d(i, i) = R.half_lengths_[i];
  R.gram_ = d * R.cartan_inverse_;
  return R;
}

std::int64_t RootSystem::height(std::size_t a) const {
  const auto& c = roots_[a].coefficients;
  return std::accumulate(c.begin(), c.end(), std::int64_t{0});
}

bool RootSystem::is_short(std::size_t a) const {
  // Compare against the longest root in the same simple component.
  std::int64_t longest = 0;
  for (std::size_t b = 0; b < roots_.size(); ++b) {
    bool same_component = false;
    for (std::size_t i = 0; i < rank_; ++i)
      if (roots_[a].coefficients[i] && roots_[b].coefficients[i]) same_component = true;
    if (same_component) longest = std::max(longest, roots_[b].half_length);
  }
  return roots_[a].half_length < longest;
}

bool RootSystem::has_two_root_lengths() const {
  for (std::size_t a = 0; a < roots_.size(); ++a)
    if (is_short(a)) return true;
  return false;
}

std::size_t RootSystem::highest_root() const { return roots_.size() - 1; }

std::optional<std::size_t> RootSystem::find_positive_root(const Weight& w) const {
  auto it = root_index_.find(w);
  if (it == root_index_.end()) return std::nullopt;
  return it->second;
}

std::int64_t RootSystem::pairing(const Weight& lambda, std::size_t a) const {
  const auto& c = roots_[a].coroot;
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < rank_; ++i) sum += lambda[i] * c[i];
  return sum;
}

Rational RootSystem::pairing(const RationalWeight& lambda, std::size_t a) const {
  const auto& c = roots_[a].coroot;
  Rational sum = 0;
  for (std::size_t i = 0; i < rank_; ++i) sum += lambda[i] * c[i];
  return sum;
}

Weight RootSystem::reflect(const Weight& nu, std::size_t a) const {
  const std::int64_t m = pairing(nu, a);
  if (m == 0) return nu;
  return nu - m * roots_[a].weight;
}

Weight RootSystem::simple_reflect(const Weight& nu, std::size_t i) const {
  Weight out = nu;
  const std::int64_t m = nu[i];
  if (m == 0) return out;
  for (std::size_t k = 0; k < rank_; ++k) out[k] -= m * cartan_[k][i];
  return out;
}

std::int64_t RootSystem::height_key(const Weight& nu) const {
  std::int64_t sum = 0;
  for (std::size_t a = 0; a < roots_.size(); ++a) sum += pairing(nu, a);
  return sum;
}

RootSystem::DominantForm RootSystem::to_dominant(const Weight& nu) const {
  DominantForm out{nu, 0};
  for (;;) {
    std::size_t i = 0;
    while (i < rank_ && out.weight[i] >= 0) ++i;
    if (i == rank_) return out;
    out.weight = simple_reflect(out.weight, i);
    ++out.reflections;
  }
}

Rational RootSystem::inner_product(const RationalWeight& x,
                                   const RationalWeight& y) const {
  Rational sum = 0;
  for (std::size_t i = 0; i < rank_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < rank_; ++j) sum += x[i] * gram_(i, j) * y[j];
  }
  return sum;
}

RationalWeight RootSystem::to_root_coordinates(const Weight& w) const {
  return cartan_inverse_.apply(w);
}

bool RootSystem::dominance_leq(const Weight& b, const Weight& a) const {
  const auto diff = to_root_coordinates(a - b);
  for (const auto& c : diff.coords)
    if (!is_integer(c) || c < 0) return false;
  return true;
}

RationalMatrix RootSystem::reflection_matrix(std::size_t a) const {
  RationalMatrix s = RationalMatrix::identity(rank_);
  const auto& alpha = roots_[a].weight;
  const auto& co = roots_[a].coroot;
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = 0; j < rank_; ++j) s(i, j) -= Rational(alpha[i] * co[j]);
  return s;
}

std::int64_t RootSystem::weyl_group_order() const {
  Rational order = 1;
  for (std::size_t a = 0; a < roots_.size(); ++a)
    order *= Rational(height(a) + 1, height(a));
  return order.numerator();
}

RootSystem RootSystem::dual() const {
  IntMatrix t(rank_, std::vector<std::int64_t>(rank_));
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = 0; j < rank_; ++j) t[i][j] = cartan_[j][i];
  return from_cartan(label_ + "^vee", t);
}

Weight dual_weight(const RootSystem& R, const Weight& lambda) {
  return R.to_dominant(-lambda).weight;
}

std::vector<Weight> weyl_orbit(const RootSystem& R, const Weight& nu) {
  std::vector<Weight> orbit{nu};
  std::unordered_set<Weight, WeightHash> seen{nu};
  for (std::size_t k = 0; k < orbit.size(); ++k) {
    for (std::size_t i = 0; i < R.rank(); ++i) {
      if (orbit[k][i] == 0) continue;
      Weight next = R.simple_reflect(orbit[k], i);
      if (seen.insert(next).second) orbit.push_back(std::move(next));
    }
  }
  return orbit;
}

namespace {

char classical_series(const RootSystem& R) {
  const char s = R.label().empty() ? '?' : R.label().front();
  if ((s != 'B' && s != 'C') || R.rank() < 2 ||
      R.label().find("^vee") != std::string::npos)
    throw InputError("epsilon coordinates are only supported for types B and C, got '" +
                     R.label() + "'");
  return s;
}

}  // namespace

RationalWeight to_epsilon(const RootSystem& R, const Weight& w) {
  const char s = classical_series(R);
  const std::size_t n = R.rank();
  RationalWeight eps(n);
  eps[n - 1] = s == 'B' ? Rational(w[n - 1], 2) : Rational(w[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) eps[i] = eps[i + 1] + w[i];
  return eps;
}

Weight from_epsilon(const RootSystem& R, const RationalWeight& eps) {
  const char s = classical_series(R);
  const std::size_t n = R.rank();
  if (eps.rank() != n)
    throw InputError("expected " + std::to_string(n) + " epsilon coordinates");
  RationalWeight w(n);
  for (std::size_t i = 0; i + 1 < n; ++i) w[i] = eps[i] - eps[i + 1];
  w[n - 1] = s == 'B' ? 2 * eps[n - 1] : eps[n - 1];
  if (!w.is_integral())
    throw InputError("epsilon vector (" + to_string(eps) + ") is not in the weight lattice of " +
                     R.label());
  return w.to_weight();
}

}  // namespace lspath
