#include "pfsm/spectrum.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>

#include "pfsm/errors.hpp"

namespace pfsm {

namespace {

constexpr double kFloatTol = 1e-9;

std::vector<double> as_doubles(const Potential& p) {
  std::vector<double> v;
  for (const auto& x : p.window()) v.push_back(x.to_double());
  return v;
}

struct DMat2 {
  double m11, m12, m21, m22;
};

DMat2 float_monodromy(const std::vector<double>& v, double energy) {
  DMat2 m{1, 0, 0, 1};
  for (double vn : v) {
    double a = energy - vn;
    m = {a * m.m11 - m.m21, a * m.m12 - m.m22, m.m11, m.m12};
  }
  return m;
}

// Eigenvalues of the symmetric tridiagonal matrix with unit off-diagonals.
std::vector<double> tridiagonal_eigenvalues(const std::vector<double>& diag) {
  std::size_t n = diag.size();
  if (n == 0) return {};
  if (n == 1) return {diag[0]};
  Eigen::VectorXd d = Eigen::Map<const Eigen::VectorXd>(diag.data(), static_cast<Eigen::Index>(n));
  Eigen::VectorXd e = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(n - 1));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(d, e, Eigen::EigenvaluesOnly);
  std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> float_band_edges(const std::vector<double>& v, const Potential& p) {
  if (v.size() == 1) return {v[0] - 2, v[0] + 2};
  std::vector<double> edges = floquet_eigenvalues(p, 0.0);
  std::vector<double> pi_edges = floquet_eigenvalues(p, M_PI);
  edges.insert(edges.end(), pi_edges.begin(), pi_edges.end());
  std::sort(edges.begin(), edges.end());
  return edges;
}

BandSet float_bands(const Potential& p) {
  std::vector<double> v = as_doubles(p);
  std::vector<double> edges = float_band_edges(v, p);
  BandSet out;
  for (std::size_t i = 0; i + 1 < edges.size(); i += 2)
    out.bands.push_back({Scalar::floating(edges[i]), Scalar::floating(edges[i + 1])});
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    double scale = std::max(1.0, std::abs(edges[i]));
    if (edges[i + 1] - edges[i] < kFloatTol * scale) {
      out.warnings.push_back("band edge ambiguous near E = " + Scalar::floating(edges[i]).to_string());
      break;
    }
  }
  out.merged.assign(out.bands.empty() ? 0 : out.bands.size() - 1, false);
  return out;
}

const Potential& at_least_two(const Potential& p, Potential& storage) {
  if (p.period() >= 2) return p;
  storage = p.doubled();
  return storage;
}

}  // namespace

BandSet spectrum_bands(const Potential& p) {
  if (!p.exact()) return float_bands(p);
  SPoly tr = trace_polynomial(p);
  SPoly two = SPoly::constant(Scalar(2));
  std::vector<ScalarRoot> roots = real_roots(tr - two);
  for (auto& r : real_roots(tr + two)) roots.push_back(r);
  std::vector<Scalar> edges;
  for (const auto& r : roots)
    for (int i = 0; i < r.multiplicity; ++i) edges.push_back(r.value);
  std::size_t k = p.period();
  if (edges.size() != 2 * k)
    throw DomainError("internal: tr M(E) -/+ 2 has " + std::to_string(edges.size()) + " real roots, expected " +
                      std::to_string(2 * k));
  std::stable_sort(edges.begin(), edges.end(), [](const Scalar& a, const Scalar& b) { return compare(a, b) < 0; });
  BandSet out;
  for (std::size_t i = 0; i < edges.size(); i += 2) out.bands.push_back({edges[i], edges[i + 1]});
  out.merged.assign(out.bands.size() - 1, false);
  return out;
}

BandSet merge_touching(const BandSet& s) {
  BandSet out;
  out.warnings = s.warnings;
  for (std::size_t i = 0; i < s.bands.size(); ++i) {
    const Band& b = s.bands[i];
    if (i > 0) {
      const Scalar& prev_hi = out.bands.back().hi;
      bool touch = b.lo.is_exact() ? compare(prev_hi, b.lo) == 0
                                   : std::abs(prev_hi.to_double() - b.lo.to_double()) <=
                                         kFloatTol * std::max(1.0, std::abs(b.lo.to_double()));
      out.merged.push_back(touch);
      if (touch) {
        out.bands.back().hi = b.hi;
        continue;
      }
    }
    out.bands.push_back(b);
  }
  return out;
}

Invertibility is_invertible(const Potential& p) {
  Scalar zero = p.at(0).like(Rational(0));
  Scalar tr = monodromy(p, zero).trace();
  if (tr.is_exact()) return {(tr * tr - Scalar(4)).sign() > 0, tr};
  return {std::abs(tr.float_value()) > 2.0, tr};
}

std::vector<Scalar> dirichlet_candidates(const Potential& p_in) {
  Potential storage = p_in;
  const Potential& p = at_least_two(p_in, storage);
  long k = static_cast<long>(p.period());
  if (!p.exact()) {
    std::vector<double> v = as_doubles(p);
    std::vector<double> eig = tridiagonal_eigenvalues(std::vector<double>(v.begin(), v.end() - 1));
    std::vector<Scalar> out;
    for (double e : eig) {
      DMat2 m = float_monodromy(v, e);
      double scale = std::max({1.0, std::abs(m.m11), std::abs(m.m12), std::abs(m.m22)});
      if (std::abs(m.m21) > 1e-8 * scale)
        throw DomainError("internal: Dirichlet eigenvalue " + std::to_string(e) + " is not a zero of M21");
      out.push_back(Scalar::floating(e));
    }
    return out;
  }
  SPoly m21 = monodromy_polynomial(p).m21;
  SPoly charpoly = section_characteristic(p, 0, k - 2);
  if (k % 2 == 0) charpoly = -charpoly;
  if (!(m21 == charpoly)) throw DomainError("internal: M21(E) disagrees with det(H_{0..K-2} - E)");
  std::vector<Scalar> out;
  for (const auto& r : real_roots(m21)) out.push_back(r.value);
  return out;
}

std::vector<std::pair<int, double>> float_dirichlet(const Potential& p_in) {
  Potential storage = p_in;
  const Potential& p = at_least_two(p_in, storage);
  std::vector<double> v = as_doubles(p);
  std::vector<double> eig = tridiagonal_eigenvalues(std::vector<double>(v.begin(), v.end() - 1));
  std::vector<std::pair<int, double>> out;
  for (std::size_t i = 0; i < eig.size(); ++i) {
    DMat2 m = float_monodromy(v, eig[i]);
    if (std::abs(m.m11) < 1.0) out.emplace_back(static_cast<int>(i), eig[i]);
  }
  return out;
}

OneSidedSpectrum one_sided_spectrum(const Potential& p_in) {
  OneSidedSpectrum out;
  out.bands = spectrum_bands(p_in);
  Potential storage = p_in;
  const Potential& p = at_least_two(p_in, storage);
  if (!p.exact()) {
    std::vector<double> v = as_doubles(p);
    std::vector<double> eig = tridiagonal_eigenvalues(std::vector<double>(v.begin(), v.end() - 1));
    for (double e : eig) {
      DMat2 m = float_monodromy(v, e);
      if (std::abs(m.m11) < 1.0)
        out.dirichlet.push_back({Scalar::floating(e), 0, false});
      else
        out.rejected.push_back(Scalar::floating(e));
    }
    return out;
  }
  SPoly m11 = monodromy_polynomial(p).m11;
  SPoly test = m11 * m11 - SPoly::constant(Scalar(1));
  for (const auto& e : dirichlet_candidates(p)) {
    if (sign_at(test, e) < 0)
      out.dirichlet.push_back({e, 0, false});
    else
      out.rejected.push_back(e);
  }
  return out;
}

std::vector<double> floquet_eigenvalues(const Potential& p_in, double phi) {
  Potential storage = p_in;
  const Potential& p = at_least_two(p_in, storage);
  std::vector<double> v = as_doubles(p);
  std::size_t k = v.size();
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    h(i, i) = v[i];
    if (i + 1 < k) h(i, i + 1) = h(i + 1, i) = 1.0;
  }
  std::complex<double> corner = std::polar(1.0, -phi);
  h(0, k - 1) += corner;
  h(k - 1, 0) += std::conj(corner);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + k);
  std::sort(out.begin(), out.end());
  return out;
}

Interlacing check_interlacing(const Potential& p_in, double phi) {
  Potential storage = p_in;
  const Potential& p = at_least_two(p_in, storage);
  Interlacing out{true, {}, floquet_eigenvalues(p, phi), {}};
  for (const auto& e : dirichlet_candidates(p.exact() ? p.to_float() : p)) out.dirichlet.push_back(e.to_double());
  std::sort(out.dirichlet.begin(), out.dirichlet.end());
  auto check = [&](double lo, double hi, const std::string& what) {
    if (out.holds && lo > hi + kFloatTol * std::max(1.0, std::abs(hi))) {
      out.holds = false;
      out.witness = what + ": " + std::to_string(lo) + " > " + std::to_string(hi);
    }
  };
  for (std::size_t i = 0; i < out.dirichlet.size(); ++i) {
    check(out.floquet[i], out.dirichlet[i], "F" + std::to_string(i + 1) + " <= D" + std::to_string(i + 1));
    check(out.dirichlet[i], out.floquet[i + 1], "D" + std::to_string(i + 1) + " <= F" + std::to_string(i + 2));
  }
  return out;
}

std::vector<SweepRow> band_diagram_sweep(const std::vector<int>& word, const std::vector<double>& grid,
                                         bool include_dirichlet) {
  if (word.empty()) throw DomainError("empty word");
  std::vector<SweepRow> rows;
  long k = static_cast<long>(word.size());
  for (double lambda : grid) {
    Potential p = Potential::scaled_word(word, Scalar::floating(lambda));
    for (const auto& b : spectrum_bands(p).bands)
      rows.push_back({lambda, SweepRowType::Band, -1, false, b.lo.to_double(), b.hi.to_double(), -1});
    if (!include_dirichlet) continue;
    for (long j = 0; j < k; ++j)
      for (bool rev : {false, true}) {
        Potential q = rev ? p.shifted(j).reversed() : p.shifted(j);
        for (const auto& [branch, e] : float_dirichlet(q))
          rows.push_back({lambda, SweepRowType::Dirichlet, j, rev, e, e, branch});
      }
  }
  return rows;
}

}  // namespace pfsm
