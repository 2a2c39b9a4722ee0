#include "ntc/lattice.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace ntc {

namespace {

[[noreturn]] void internal_error(const std::string& what) {
  throw std::logic_error("internal invariant violated: " + what);
}

void require_dim(std::size_t have, std::size_t want) {
  if (have != want)
    throw GraphError(GraphErrorCode::dimension_mismatch, "cycle",
                     "cycle has " + std::to_string(have) + " coefficients, graph has " +
                         std::to_string(want) + " vertices");
}

}  // namespace

Matrix intersection_form(const WeightedDualGraph& g) {
  const std::size_t n = g.vertices.size();
  if (n == 0)
    throw GraphError(GraphErrorCode::no_vertices, "/vertices", "graph has no vertices");
  Matrix m(n, ZVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = g.vertices[i].self;
  for (auto [i, j] : g.edges) {
    m[i][j] += 1;
    m[j][i] += 1;
  }
  return m;
}

bool is_negative_definite(const Matrix& m) {
  const std::size_t n = m.size();
  // Sylvester on -M via fraction-free (Bareiss) elimination: before step k
  // the pivot a[k][k] equals the (k+1)-st leading principal minor of -M.
  Matrix a(n, ZVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = -m[i][j];
  Int prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return true;
}

ZVec canonical_values(const WeightedDualGraph& g) {
  ZVec k(g.vertices.size());
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    k[i] = Int(2 * g.vertices[i].genus - 2 - g.vertices[i].self);
  return k;
}

IntersectionLattice::IntersectionLattice(const WeightedDualGraph& g) : g_(g) {
  validate_graph(g_);  // structure + negative definiteness
  m_ = intersection_form(g_);
  kvals_ = canonical_values(g_);

  const std::size_t n = m_.size();
  duals_.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    QVec rhs(n, Rat(0));
    rhs[j] = Rat(-1);
    duals_[j] = solve(rhs);
    for (const Rat& c : duals_[j])
      if (c <= Rat(0)) internal_error("dual cycle with a nonpositive coefficient");
  }

  QVec rhs(n);
  for (std::size_t i = 0; i < n; ++i) rhs[i] = Rat(-kvals_[i]);
  zk_ = solve(rhs);
}

QVec IntersectionLattice::solve(const QVec& rhs) const {
  const std::size_t n = m_.size();
  std::vector<QVec> a(n, QVec(n));
  QVec b = rhs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(m_[i][j]);

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == Rat(0)) ++piv;
    if (piv == n) internal_error("singular intersection form");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == Rat(0)) continue;
      Rat f = a[row][col] / a[col][col];
      for (std::size_t j = col; j < n; ++j) a[row][j] -= f * a[col][j];
      b[row] -= f * b[col];
    }
  }
  QVec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

Rat IntersectionLattice::pairing(const QVec& z, const QVec& w) const {
  require_dim(z.size(), size());
  require_dim(w.size(), size());
  Rat total(0);
  for (std::size_t i = 0; i < size(); ++i) {
    if (z[i] == Rat(0)) continue;
    Rat row(0);
    for (std::size_t j = 0; j < size(); ++j)
      if (w[j] != Rat(0)) row += Rat(m_[i][j]) * w[j];
    total += z[i] * row;
  }
  return total;
}

Rat IntersectionLattice::pairing_with_vertex(const QVec& z, std::size_t i) const {
  require_dim(z.size(), size());
  Rat total(0);
  for (std::size_t j = 0; j < size(); ++j)
    if (z[j] != Rat(0)) total += Rat(m_[i][j]) * z[j];
  return total;
}

Rat IntersectionLattice::self_intersection(const QVec& z) const { return pairing(z, z); }

Rat IntersectionLattice::k_dot(const QVec& z) const {
  require_dim(z.size(), size());
  Rat total(0);
  for (std::size_t i = 0; i < size(); ++i) total += Rat(kvals_[i]) * z[i];
  return total;
}

Rat IntersectionLattice::chi(const QVec& z) const {
  Rat c = (self_intersection(z) + k_dot(z)) * Rat(-1, 2);
  if (is_integral(z) && !is_integer(c))
    internal_error("chi of an integral cycle is not an integer");
  return c;
}

const QVec& IntersectionLattice::dual_cycle(std::size_t j) const {
  if (j >= size())
    throw GraphError(GraphErrorCode::unknown_id, "vertex index " + std::to_string(j),
                     "vertex index out of range");
  return duals_[j];
}

const QVec& IntersectionLattice::canonical_cycle() const { return zk_; }

QVec IntersectionLattice::cycle_from_arrows() const {
  if (g_.arrows.empty())
    throw GraphError(GraphErrorCode::no_arrows, "/arrows",
                     "graph has no arrows: no cycle to reconstruct");
  QVec z(size(), Rat(0));
  for (const Arrow& a : g_.arrows) {
    std::size_t at = g_.index_of(a.at);
    for (std::size_t i = 0; i < size(); ++i) z[i] += Rat(a.weight) * duals_[at][i];
  }
  if (!is_antinef(z)) internal_error("cycle reconstructed from arrows is not anti-nef");
  return z;
}

bool IntersectionLattice::is_antinef(const QVec& z) const {
  require_dim(z.size(), size());
  for (std::size_t i = 0; i < size(); ++i)
    if (pairing_with_vertex(z, i) > Rat(0)) return false;
  return true;
}

ZVec IntersectionLattice::fundamental_cycle() const {
  const std::size_t n = size();
  ZVec z(n, 0);
  z[0] = 1;
  for (long long rounds = 0;; ++rounds) {
    if (rounds > 1000000) internal_error("fundamental cycle computation did not terminate");
    std::size_t bump = n;
    for (std::size_t i = 0; i < n && bump == n; ++i) {
      Int prod(0);
      for (std::size_t j = 0; j < n; ++j) prod += m_[i][j] * z[j];
      if (prod > 0) bump = i;
    }
    if (bump == n) return z;
    z[bump] += 1;
  }
}

void IntersectionLattice::enumerate(const QVec& threshold, bool include_boundary,
                                    std::vector<ZVec>& out) const {
  const std::size_t n = size();
  // DFS over nonnegative combinations sum n_j E_j^*, visiting each
  // combination exactly once via nondecreasing generator indices. Every
  // anti-nef cycle is such a combination (n_j = -Z.E_j), and each added dual
  // is strictly positive in every coordinate, so once a partial sum
  // dominates the threshold coefficientwise every extension does too:
  // prune there. Domination of the fixed threshold also bounds the depth,
  // so the search is finite.
  QVec z(n, Rat(0));
  auto dominates = [&]() {
    for (std::size_t i = 0; i < n; ++i)
      if (z[i] < threshold[i]) return false;
    return true;
  };
  std::function<void(std::size_t, bool)> rec = [&](std::size_t start, bool nonzero) {
    if (dominates()) {
      if (include_boundary && nonzero && z == threshold && is_integral(z))
        out.push_back(to_integral(z));
      return;
    }
    if (nonzero && is_integral(z)) out.push_back(to_integral(z));
    for (std::size_t j = start; j < n; ++j) {
      for (std::size_t i = 0; i < n; ++i) z[i] += duals_[j][i];
      rec(j, true);
      for (std::size_t i = 0; i < n; ++i) z[i] -= duals_[j][i];
    }
  };
  rec(0, false);
  std::sort(out.begin(), out.end());
}

std::vector<ZVec> IntersectionLattice::enumerate_antinef_below(const ZVec& w) const {
  require_dim(w.size(), size());
  for (const Int& c : w)
    if (c < 0) throw std::invalid_argument("bound cycle has a negative coefficient");
  std::vector<ZVec> out;
  enumerate(to_rational(w), /*include_boundary=*/false, out);
  return out;
}

IntersectionLattice::CanonicalEnumeration
IntersectionLattice::enumerate_antinef_not_exceeding_canonical() const {
  CanonicalEnumeration result;
  result.degenerate_warning =
      std::none_of(zk_.begin(), zk_.end(), [](const Rat& c) { return c > Rat(0); });
  enumerate(zk_, /*include_boundary=*/true, result.cycles);
  return result;
}

IntersectionLattice::ChiMin IntersectionLattice::chi_min(const ZVec& bound) const {
  require_dim(bound.size(), size());
  bool positive = false;
  for (const Int& c : bound) {
    if (c < 0) throw std::invalid_argument("bound cycle has a negative coefficient");
    if (c > 0) positive = true;
  }
  if (!positive) throw std::invalid_argument("bound cycle must be positive");

  Int box(1);
  for (const Int& c : bound) {
    box *= c + 1;
    if (box > 4000000)
      throw std::invalid_argument(
          "search box exceeds 4e6 points; supply a smaller bound");
  }

  const std::size_t n = size();
  ZVec c(n, 0);
  ChiMin best;
  bool have = false;
  // Odometer in lexicographic order (last coordinate fastest), so the first
  // minimizer found is the lexicographically least one.
  for (;;) {
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (c[i] < bound[i]) {
        ++c[i];
        for (std::size_t j = i + 1; j < n; ++j) c[j] = 0;
        break;
      }
      if (i == 0) {
        if (!have) internal_error("empty chi_min search box");
        return best;
      }
    }
    // chi over integers: -(Z^2 + K.Z)/2
    Int zsq(0), kz(0);
    for (std::size_t a = 0; a < n; ++a) {
      if (c[a] == 0) continue;
      Int row(0);
      for (std::size_t b = 0; b < n; ++b) row += m_[a][b] * c[b];
      zsq += c[a] * row;
      kz += kvals_[a] * c[a];
    }
    Rat value = Rat(zsq + kz) * Rat(-1, 2);
    if (!have || value < best.value) {
      best.value = value;
      best.witness = c;
      have = true;
    }
  }
}

}  // namespace ntc
