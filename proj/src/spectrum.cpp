#include "arglab/spectrum.hpp"

#include <utility>

namespace arglab {

namespace {

// Reduced row of the growing Krylov space: the vectorized power after
// elimination, plus its expression in the power basis.
struct EchelonRow {
  std::size_t pivot = 0;
  std::vector<mpq_class> vec;    // length n*n, leading entry 1
  std::vector<mpq_class> combo;  // combo[i] multiplies vec(A^i)
};

}  // namespace

std::vector<mpz_class> minimal_polynomial(const Graph& g) {
  const int n = g.order();
  if (n == 0) return {mpz_class(1)};

  const std::size_t dim = static_cast<std::size_t>(n) * n;
  std::vector<std::vector<int>> adj(n);
  for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v);

  // Current power A^d, exact integer entries.
  std::vector<mpz_class> power(dim, 0);
  for (int i = 0; i < n; ++i) power[static_cast<std::size_t>(i) * n + i] = 1;

  std::vector<EchelonRow> rows;
  for (int degree = 0; degree <= n; ++degree) {
    std::vector<mpq_class> v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = power[i];
    std::vector<mpq_class> combo(degree + 1, 0);
    combo[degree] = 1;

    for (const EchelonRow& row : rows) {
      const mpq_class factor = v[row.pivot];
      if (factor == 0) continue;
      for (std::size_t i = row.pivot; i < dim; ++i)
        if (row.vec[i] != 0) v[i] -= factor * row.vec[i];
      for (std::size_t i = 0; i < row.combo.size(); ++i) combo[i] -= factor * row.combo[i];
    }

    std::size_t pivot = dim;
    for (std::size_t i = 0; i < dim; ++i)
      if (v[i] != 0) {
        pivot = i;
        break;
      }

    if (pivot == dim) {
      // A^degree fell into the span: combo holds the monic minimal polynomial.
      std::vector<mpz_class> coeffs(degree + 1);
      for (int i = 0; i <= degree; ++i) {
        mpq_class c = combo[i];
        c.canonicalize();
        if (c.get_den() != 1)
          throw Error(ErrorKind::MalformedInstance, "minimal polynomial left the integers");
        coeffs[i] = c.get_num();
      }
      return coeffs;
    }

    const mpq_class lead = v[pivot];
    for (std::size_t i = pivot; i < dim; ++i)
      if (v[i] != 0) v[i] /= lead;
    for (auto& c : combo) c /= lead;
    rows.push_back(EchelonRow{pivot, std::move(v), std::move(combo)});

    // power <- power * A; A is 0/1, so each entry is a neighbor sum.
    std::vector<mpz_class> next(dim, 0);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        mpz_class sum = 0;
        for (int w : adj[c]) sum += power[static_cast<std::size_t>(r) * n + w];
        next[static_cast<std::size_t>(r) * n + c] = std::move(sum);
      }
    power = std::move(next);
  }
  throw Error(ErrorKind::MalformedInstance, "no dependence up to degree n");
}

int distinct_eigenvalue_count(const Graph& g) {
  return static_cast<int>(minimal_polynomial(g).size()) - 1;
}

SrgEigenvalues srg_eigenvalues(const ArParams& p) {
  if (p.k < 1 || p.lambda < 0 || p.mu < 0 || p.lambda > p.k - 1 || p.mu > p.k)
    throw Error(ErrorKind::InfeasibleParameters, "parameters violate SRG constraints: " + p.to_string());
  SrgEigenvalues out;
  out.s = p.lambda - p.mu;
  out.disc = out.s * out.s + 4 * (p.k - p.mu);
  if (out.disc < 0)
    throw Error(ErrorKind::InfeasibleParameters, "negative discriminant for " + p.to_string());
  long long root = 0;
  while ((root + 1) * (root + 1) <= out.disc) ++root;
  if (root * root == out.disc && (out.s + root) % 2 == 0) {
    out.integral = true;
    out.theta1 = (out.s + root) / 2;
    out.theta2 = (out.s - root) / 2;
  }
  return out;
}

}  // namespace arglab
