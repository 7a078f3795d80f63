#include "lietools/rootsys.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>

#include "lietools/errors.hpp"
#include "lietools/linalg.hpp"

namespace lietools {

namespace {

int min_rank(Family f) {
  switch (f) {
    case Family::A: return 1;
    case Family::B: return 2;
    case Family::C: return 2;
    case Family::D: return 3;
    default: return 0;
  }
}

IntVector unit(std::size_t dim, std::size_t i, int scale = 1) {
  IntVector v(dim, 0);
  v[i] = scale;
  return v;
}

IntVector combine(std::size_t dim, std::size_t i, int si, std::size_t j, int sj) {
  IntVector v(dim, 0);
  v[i] += si;
  v[j] += sj;
  return v;
}

long long dot(const IntVector& a, const IntVector& b) {
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long long>(a[i]) * b[i];
  return s;
}

IntMatrix cartan_from_simple_roots(const IntMatrix& simple) {
  const std::size_t n = simple.size();
  IntMatrix a(n, IntVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a[i][j] = static_cast<int>(2 * dot(simple[i], simple[j]) / dot(simple[j], simple[j]));
  return a;
}

IntMatrix exceptional_cartan(const LieType& t) {
  const auto n = static_cast<std::size_t>(t.rank());
  IntMatrix a(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](std::size_t i, std::size_t j) {  // 1-based Bourbaki labels
    a[i - 1][j - 1] = -1;
    a[j - 1][i - 1] = -1;
  };
  if (t.family() == Family::E) {
    link(1, 3);
    link(2, 4);
    for (std::size_t i = 3; i < n; ++i) link(i, i + 1);
  } else if (t.family() == Family::F) {
    link(1, 2);
    link(2, 3);
    link(3, 4);
    a[1][2] = -2;  // alpha_2 long, alpha_3 short
  } else {
    throw InconsistencyError("no hardcoded Cartan matrix for " + t.to_string());
  }
  return a;
}

struct AmbientData {
  std::size_t dim = 0;
  IntMatrix simple;
  IntMatrix candidates;  // superset of the positive roots
};

AmbientData classical_ambient(const LieType& t) {
  const auto n = static_cast<std::size_t>(t.rank());
  AmbientData d;
  if (t.family() == Family::A) {
    d.dim = n + 1;
    for (std::size_t i = 0; i < n; ++i) d.simple.push_back(combine(d.dim, i, 1, i + 1, -1));
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t j = i + 1; j <= n; ++j) d.candidates.push_back(combine(d.dim, i, 1, j, -1));
    return d;
  }
  d.dim = n;
  for (std::size_t i = 0; i + 1 < n; ++i) d.simple.push_back(combine(n, i, 1, i + 1, -1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      d.candidates.push_back(combine(n, i, 1, j, -1));
      d.candidates.push_back(combine(n, i, 1, j, 1));
    }
  switch (t.family()) {
    case Family::B:
      d.simple.push_back(unit(n, n - 1));
      for (std::size_t i = 0; i < n; ++i) d.candidates.push_back(unit(n, i));
      break;
    case Family::C:
      d.simple.push_back(unit(n, n - 1, 2));
      for (std::size_t i = 0; i < n; ++i) d.candidates.push_back(unit(n, i, 2));
      break;
    case Family::D:
      d.simple.push_back(combine(n, n - 2, 1, n - 1, 1));
      break;
    default:
      break;
  }
  return d;
}

AmbientData g2_ambient() {
  AmbientData d;
  d.dim = 3;
  d.simple = {{1, -1, 0}, {-2, 1, 1}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (i != j) d.candidates.push_back(combine(3, i, 1, j, -1));
  // Long roots +-(2e_i - e_j - e_k).
  for (std::size_t i = 0; i < 3; ++i) {
    IntVector v(3, -1);
    v[i] = 2;
    d.candidates.push_back(v);
    for (int& x : v) x = -x;
    d.candidates.push_back(v);
  }
  return d;
}

// Solves c . S = v over the integers. Precomputes an integer-scaled inverse
// of a maximal invertible column block of S.
class SimpleRootExpander {
public:
  explicit SimpleRootExpander(const IntMatrix& simple) : simple_(simple) {
    const std::size_t n = simple.size();
    const std::size_t dim = simple.front().size();
    RationalMatrix s(n, dim);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < dim; ++j) s(i, j) = simple[i][j];
    RationalMatrix reduced = s;
    pivots_ = row_reduce(reduced);
    if (pivots_.size() != n) throw InconsistencyError("simple roots are linearly dependent");
    RationalMatrix block(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) block(i, k) = s(i, pivots_[k]);
    const RationalMatrix inv = inverse(block);
    mpz_class denom = 1;
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) denom = lcm(denom, inv(k, i).get_den());
    denominator_ = denom.get_si();
    scaled_inverse_.assign(n, std::vector<long long>(n));
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) {
        Rational scaled = inv(k, i) * denom;
        scaled_inverse_[k][i] = scaled.get_num().get_si();
      }
  }

  IntVector expand(const IntVector& v) const {
    const std::size_t n = simple_.size();
    std::vector<long long> acc(n, 0);
    for (std::size_t k = 0; k < n; ++k) {
      const long long x = v[pivots_[k]];
      if (x == 0) continue;  // roots are sparse in ambient coordinates
      for (std::size_t i = 0; i < n; ++i) acc[i] += x * scaled_inverse_[k][i];
    }
    IntVector c(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (acc[i] % denominator_ != 0) throw InconsistencyError("root has non-integral simple-root expansion");
      c[i] = static_cast<int>(acc[i] / denominator_);
    }
    IntVector back(v.size(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (c[i] == 0) continue;
      for (std::size_t j = 0; j < v.size(); ++j) back[j] += c[i] * simple_[i][j];
    }
    if (back != v) throw InconsistencyError("root is not in the span of the simple roots");
    return c;
  }

private:
  const IntMatrix& simple_;
  std::vector<std::size_t> pivots_;
  std::vector<std::vector<long long>> scaled_inverse_;
  long long denominator_ = 1;
};

int sum(const IntVector& v) { return std::accumulate(v.begin(), v.end(), 0); }

}  // namespace

char family_letter(Family f) noexcept { return static_cast<char>('A' + static_cast<int>(f)); }

LieType::LieType(Family family, int rank) : family_(family), rank_(rank) {
  const std::string label = std::string(1, family_letter(family)) + std::to_string(rank);
  bool ok = false;
  switch (family) {
    case Family::A: ok = rank >= 1; break;
    case Family::B: ok = rank >= 2; break;
    case Family::C: ok = rank >= 2; break;
    case Family::D: ok = rank >= 3; break;
    case Family::E: ok = rank >= 6 && rank <= 8; break;
    case Family::F: ok = rank == 4; break;
    case Family::G: ok = rank == 2; break;
  }
  if (!ok) {
    std::string rule;
    switch (family) {
      case Family::E: rule = "rank in {6,7,8}"; break;
      case Family::F: rule = "rank = 4"; break;
      case Family::G: rule = "rank = 2"; break;
      default: rule = "rank >= " + std::to_string(min_rank(family)); break;
    }
    throw InvalidTypeError("invalid Lie type " + label + ": family " +
                           std::string(1, family_letter(family)) + " requires " + rule);
  }
  if (family == Family::C && rank == 2) family_ = Family::B;
  if (family == Family::D && rank == 3) family_ = Family::A;
}

LieType LieType::parse(std::string_view text) {
  if (text.size() < 2 || text[0] < 'A' || text[0] > 'G')
    throw ParseError("cannot parse Lie type '" + std::string(text) + "': expected a letter A-G followed by a rank");
  if (text[1] == '0') throw ParseError("cannot parse Lie type '" + std::string(text) + "': rank has a leading zero");
  int rank = 0;
  for (std::size_t i = 1; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9')
      throw ParseError("cannot parse Lie type '" + std::string(text) + "': rank must be decimal digits");
    if (rank > 100000) throw ParseError("cannot parse Lie type '" + std::string(text) + "': rank too large");
    rank = rank * 10 + (text[i] - '0');
  }
  return LieType(static_cast<Family>(text[0] - 'A'), rank);
}

std::string LieType::to_string() const { return std::string(1, family_letter(family_)) + std::to_string(rank_); }

std::optional<std::size_t> RootSystem::find(const IntVector& ambient_root) const {
  auto it = index_.find(ambient_root);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

IntMatrix cartan_matrix(const LieType& t) {
  if (t.is_exceptional() && t.family() != Family::G) return exceptional_cartan(t);
  return build_root_system(t).cartan_matrix();
}

IntMatrix positive_roots_from_cartan(const IntMatrix& cartan) {
  const std::size_t n = cartan.size();
  std::set<IntVector> known;
  std::vector<IntVector> level;
  for (std::size_t i = 0; i < n; ++i) {
    level.push_back(IntVector(n, 0));
    level.back()[i] = 1;
    known.insert(level.back());
  }
  IntMatrix out(level.begin(), level.end());
  while (!level.empty()) {
    std::set<IntVector> next;
    for (const auto& beta : level) {
      for (std::size_t i = 0; i < n; ++i) {
        // p: how far the i-string through beta extends downward.
        int p = 0;
        IntVector down = beta;
        while (true) {
          --down[i];
          if (down[i] < 0 || !known.count(down)) break;
          ++p;
        }
        int pairing = 0;  // <beta, alpha_i^vee>
        for (std::size_t j = 0; j < n; ++j) pairing += beta[j] * cartan[j][i];
        if (p - pairing > 0) {
          IntVector up = beta;
          ++up[i];
          if (!known.count(up)) next.insert(up);
        }
      }
    }
    level.assign(next.begin(), next.end());
    for (const auto& r : level) {
      known.insert(r);
      out.push_back(r);
    }
  }
  return out;
}

RootSystem build_root_system(const LieType& t) {
  if (t.rank() > kMaxRootSystemRank)
    throw CapacityError("root data is built only up to rank " + std::to_string(kMaxRootSystemRank) + ", got " +
                        t.to_string());
  RootSystem rs(t);
  const auto n = static_cast<std::size_t>(t.rank());

  if (t.family() == Family::E || t.family() == Family::F) {
    rs.cartan_ = exceptional_cartan(t);
    rs.ambient_dim_ = n;
    for (std::size_t i = 0; i < n; ++i) rs.simple_roots_.push_back(unit(n, i));
    rs.positive_roots_ = positive_roots_from_cartan(rs.cartan_);
    rs.coefficients_ = rs.positive_roots_;
  } else {
    AmbientData d = t.family() == Family::G ? g2_ambient() : classical_ambient(t);
    rs.ambient_dim_ = d.dim;
    rs.simple_roots_ = d.simple;
    rs.cartan_ = cartan_from_simple_roots(d.simple);
    SimpleRootExpander expander(rs.simple_roots_);
    for (auto& root : d.candidates) {
      IntVector c = expander.expand(root);
      const bool nonneg = std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
      const bool nonpos = std::all_of(c.begin(), c.end(), [](int x) { return x <= 0; });
      if (!nonneg && !nonpos) throw InconsistencyError("root " + t.to_string() + " has mixed-sign expansion");
      if (t.family() != Family::G && !nonneg)
        throw InconsistencyError("positive root of " + t.to_string() + " expands with a negative coefficient");
      if (!nonneg) continue;
      rs.positive_roots_.push_back(std::move(root));
      rs.coefficients_.push_back(std::move(c));
    }
  }

  std::vector<std::size_t> order(rs.positive_roots_.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> height(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) height[i] = sum(rs.coefficients_[i]);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (height[a] != height[b]) return height[a] < height[b];
    return rs.coefficients_[a] > rs.coefficients_[b];
  });
  IntMatrix roots, coeffs;
  for (std::size_t i : order) {
    roots.push_back(rs.positive_roots_[i]);
    coeffs.push_back(rs.coefficients_[i]);
  }
  rs.positive_roots_ = std::move(roots);
  rs.coefficients_ = std::move(coeffs);
  for (std::size_t i = 0; i < rs.positive_roots_.size(); ++i) {
    rs.heights_.push_back(sum(rs.coefficients_[i]));
    if (!rs.index_.emplace(rs.positive_roots_[i], i).second)
      throw InconsistencyError("duplicate positive root in " + t.to_string());
  }
  return rs;
}

std::shared_ptr<const RootSystem> root_system(const LieType& t) {
  static std::mutex mutex;
  static std::map<LieType, std::shared_ptr<const RootSystem>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(t); it != cache.end()) return it->second;
  }
  auto built = std::make_shared<const RootSystem>(build_root_system(t));
  std::lock_guard lock(mutex);
  return cache.emplace(t, std::move(built)).first->second;
}

int group_dimension(const LieType& t) { return root_system(t)->dimension(); }

int principal_h_eigenvalue(const RootSystem& rs, std::size_t root_index) {
  if (root_index >= rs.num_positive_roots())
    throw DomainError("root index " + std::to_string(root_index) + " out of range for " + rs.lie_type().to_string());
  return 2 * rs.heights()[root_index];
}

int principal_h_eigenvalue(const RootSystem& rs, const IntVector& root) {
  auto idx = rs.find(root);
  if (!idx) throw DomainError("vector is not a positive root of " + rs.lie_type().to_string());
  return principal_h_eigenvalue(rs, *idx);
}

int regular_orbit_dimension(const LieType& t) { return group_dimension(t) - t.rank(); }

}  // namespace lietools
