// Copyright 2025 Qilimanjaro Quantum Tech
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "qgate/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "qgate/propagator.hpp"

namespace qgate {

FockBasis::FockBasis(std::size_t sites, std::vector<int> site_totals)
    : sites_(sites), site_totals_(std::move(site_totals)) {
  if (sites_ != 1 && sites_ != 2) throw std::invalid_argument("FockBasis: one or two sites supported");
  if (site_totals_.size() != sites_) throw std::invalid_argument("FockBasis: one total per site");
  for (int n : site_totals_) {
    if (n < 1) throw std::invalid_argument("FockBasis: every site needs at least one atom");
    total_ += n;
  }
  if (sites_ == 1) {
    for (int nb = 0; nb <= total_; ++nb) states_.push_back({{total_ - nb, nb}});
    return;
  }
  const int N = total_;
  for (int na1 = N; na1 >= 0; --na1) {
    for (int nb1 = N - na1; nb1 >= 0; --nb1) {
      for (int na2 = N - na1 - nb1; na2 >= 0; --na2) {
        states_.push_back({{na1, nb1}, {na2, N - na1 - nb1 - na2}});
      }
    }
  }
}

std::optional<std::size_t> FockBasis::index_of(const std::vector<SiteOccupation>& s) const {
  for (std::size_t i = 0; i < states_.size(); ++i) {
    if (states_[i] == s) return i;
  }
  return std::nullopt;
}

FockBasis build_fock_basis(std::size_t sites, std::vector<int> site_totals) {
  return FockBasis(sites, std::move(site_totals));
}

namespace {

enum class Term { HopA, HopB, LaserUp, LaserDown };

struct Entry {
  std::size_t row;
  std::size_t col;
  Term term;
  double amp;
};

double onsite(const SiteOccupation& s, const LatticeParams& p) {
  const double na = s.n_a;
  const double nb = s.n_b;
  return 0.5 * p.u_bb * nb * (nb - 1.0) + 0.5 * p.u_aa * na * (na - 1.0) + p.u_ab * na * nb +
         0.5 * p.delta_k * (na - nb);
}

// Static diagonal and the off-diagonal entries of a one- or two-site model.
class Terms {
 public:
  Terms(const FockBasis& basis, int drive_site) : basis_(basis) {
    if (basis.sites() == 2 && drive_site != 1 && drive_site != 2) {
      throw std::invalid_argument("two_site_hamiltonian: drive_site must be 1 or 2");
    }
    const std::size_t ds = basis.sites() == 1 ? 0 : static_cast<std::size_t>(drive_site - 1);
    for (std::size_t i = 0; i < basis.dim(); ++i) {
      const auto& s = basis.state(i);
      // Laser a^dag b and b^dag a on the driven site.
      if (s[ds].n_b > 0) add(s, i, ds, +1, Term::LaserUp, std::sqrt(double(s[ds].n_b) * (s[ds].n_a + 1)));
      if (s[ds].n_a > 0) add(s, i, ds, -1, Term::LaserDown, std::sqrt(double(s[ds].n_a) * (s[ds].n_b + 1)));
      if (basis.sites() == 1) continue;
      for (std::size_t src = 0; src < 2; ++src) {
        const std::size_t dst = 1 - src;
        if (s[src].n_a > 0) hop(s, i, src, dst, true);
        if (s[src].n_b > 0) hop(s, i, src, dst, false);
      }
    }
  }

  RealVector diagonal(const LatticeParams& p) const {
    RealVector d(static_cast<Eigen::Index>(basis_.dim()));
    for (std::size_t i = 0; i < basis_.dim(); ++i) {
      const auto& s = basis_.state(i);
      double e = 0.0;
      for (std::size_t k = 0; k < s.size(); ++k) {
        e += onsite(s[k], p);
        if (basis_.sites() == 2) e += static_cast<double>(k + 1) * p.g * (s[k].n_a - s[k].n_b);
      }
      d(static_cast<Eigen::Index>(i)) = e;
    }
    return d;
  }

  static cplx value(const Entry& e, const LatticeParams& p) {
    switch (e.term) {
      case Term::HopA:
        return p.j_a * e.amp;
      case Term::HopB:
        return -p.j_b * e.amp;
      case Term::LaserUp:
        return 0.5 * p.omega_k * e.amp * std::polar(1.0, p.phi);
      case Term::LaserDown:
        return 0.5 * p.omega_k * e.amp * std::polar(1.0, -p.phi);
    }
    return 0.0;
  }

  Matrix dense(const LatticeParams& p) const {
    const auto n = static_cast<Eigen::Index>(basis_.dim());
    Matrix h = Matrix::Zero(n, n);
    h.diagonal() = diagonal(p).cast<cplx>();
    for (const auto& e : entries_) {
      h(static_cast<Eigen::Index>(e.row), static_cast<Eigen::Index>(e.col)) += value(e, p);
    }
    return h;
  }

  const std::vector<Entry>& entries() const { return entries_; }

 private:
  void add(const std::vector<SiteOccupation>& s, std::size_t col, std::size_t site, int da, Term t, double amp) {
    auto target = s;
    target[site].n_a += da;
    target[site].n_b -= da;
    entries_.push_back({*basis_.index_of(target), col, t, amp});
  }

  void hop(const std::vector<SiteOccupation>& s, std::size_t col, std::size_t src, std::size_t dst, bool species_a) {
    auto target = s;
    const int ns = species_a ? s[src].n_a : s[src].n_b;
    const int nd = species_a ? s[dst].n_a : s[dst].n_b;
    if (species_a) {
      --target[src].n_a;
      ++target[dst].n_a;
    } else {
      --target[src].n_b;
      ++target[dst].n_b;
    }
    entries_.push_back({*basis_.index_of(target), col, species_a ? Term::HopA : Term::HopB,
                        std::sqrt(double(ns) * (nd + 1))});
  }

  const FockBasis& basis_;
  std::vector<Entry> entries_;
};

}  // namespace

Operator single_site_hamiltonian(int n, const LatticeParams& p) {
  const FockBasis basis(1, {n});
  return Operator(Terms(basis, 1).dense(p));
}

Operator two_site_hamiltonian(const FockBasis& basis, const LatticeParams& p, int drive_site) {
  if (basis.sites() != 2) throw std::invalid_argument("two_site_hamiltonian: basis must span two sites");
  return Operator(Terms(basis, drive_site).dense(p));
}

std::vector<std::size_t> qubit_indices(const FockBasis& basis, const std::vector<int>& occ) {
  if (occ.size() != basis.sites()) throw std::invalid_argument("qubit_indices: one occupation per site");
  std::vector<std::size_t> out;
  const auto q = [](int n, int x) { return x == 0 ? SiteOccupation{n, 0} : SiteOccupation{n - 1, 1}; };
  const std::size_t nq = std::size_t{1} << basis.sites();
  for (std::size_t code = 0; code < nq; ++code) {
    std::vector<SiteOccupation> s;
    for (std::size_t k = 0; k < basis.sites(); ++k) {
      const int bit = static_cast<int>((code >> (basis.sites() - 1 - k)) & 1U);
      s.push_back(q(occ[k], bit));
    }
    const auto idx = basis.index_of(s);
    if (!idx) throw std::invalid_argument("qubit_indices: qubit state not in basis");
    out.push_back(*idx);
  }
  return out;
}

Operator qubit_projector(const FockBasis& basis, const std::vector<int>& occ) {
  std::vector<cplx> diag(basis.dim(), 0.0);
  for (std::size_t i : qubit_indices(basis, occ)) diag[i] = 1.0;
  return Operator::diagonal(diag);
}

double effective_rabi(int n_k, double omega_k) {
  if (n_k < 1) throw std::invalid_argument("effective_rabi: n_k must be at least 1");
  LatticeParams p;
  p.omega_k = omega_k;
  const Operator h = single_site_hamiltonian(n_k, p);
  return 2.0 * std::abs(h(1, 0));
}

double delta_shift(int n_k, double omega, double delta, const LatticeParams& p) {
  const double den = delta + p.u_ab - p.u_bb;
  const double scale = std::max({1.0, std::abs(delta), std::abs(p.u_ab), std::abs(p.u_bb)});
  if (std::abs(den) <= 1e-12 * scale) throw std::domain_error("delta_shift: singular regime (vanishing denominator)");
  return delta + 2.0 * omega * omega * n_k / den;
}

EffectiveQubitModel effective_qubit_model(int n_k, const LatticeParams& p) {
  EffectiveQubitModel m;
  m.omega_eff = effective_rabi(n_k, p.omega_k);
  m.delta_eff = delta_shift(n_k, p.omega_k, p.delta_k, p);
  const double gap = p.g - p.u_bb;
  if (std::abs(gap) > 0.0) {
    m.coupling = p.j_b * p.j_b / gap;
    m.leakage_bound = (p.j_b / gap) * (p.j_b / gap);
  } else {
    m.coupling = std::numeric_limits<double>::infinity();
    m.leakage_bound = std::numeric_limits<double>::infinity();
  }
  return m;
}

namespace {

struct Reduced {
  Matrix h;
  double min_gap = std::numeric_limits<double>::infinity();
  double max_coupling = 0.0;
};

// Second-order block reduction given P energies, couplings C (P x virtual) and virtual energies.
Reduced reduce(Matrix php, const RealVector& ep, const Matrix& c, const RealVector& ev) {
  Reduced r;
  const Eigen::Index np = php.rows();
  for (Eigen::Index v = 0; v < ev.size(); ++v) {
    double col_max = 0.0;
    for (Eigen::Index i = 0; i < np; ++i) col_max = std::max(col_max, std::abs(c(i, v)));
    if (col_max == 0.0) continue;
    r.max_coupling = std::max(r.max_coupling, col_max);
    for (Eigen::Index i = 0; i < np; ++i) r.min_gap = std::min(r.min_gap, std::abs(ep(i) - ev(v)));
    for (Eigen::Index i = 0; i < np; ++i) {
      if (c(i, v) == cplx(0.0)) continue;
      for (Eigen::Index j = 0; j < np; ++j) {
        if (c(j, v) == cplx(0.0)) continue;
        php(i, j) += 0.5 * c(i, v) * std::conj(c(j, v)) * (1.0 / (ep(i) - ev(v)) + 1.0 / (ep(j) - ev(v)));
      }
    }
  }
  r.h = std::move(php);
  return r;
}

}  // namespace

EffectiveHamiltonian effective_hamiltonian_2nd_order(const Operator& full, const Operator& projector,
                                                     GapPartition partition, double gap_factor, bool strict) {
  if (full.dim() != projector.dim()) throw std::invalid_argument("effective_hamiltonian: dimension mismatch");
  if (!full.is_hermitian()) throw std::invalid_argument("effective_hamiltonian: operator is not Hermitian");
  std::vector<Eigen::Index> p_idx;
  std::vector<Eigen::Index> q_idx;
  const Matrix& pm = projector.matrix();
  for (Eigen::Index i = 0; i < pm.rows(); ++i) {
    for (Eigen::Index j = 0; j < pm.cols(); ++j) {
      const cplx expect = (i == j && std::abs(pm(i, i) - 1.0) < 1e-12) ? cplx(1.0) : cplx(0.0);
      if (std::abs(pm(i, j) - expect) > 1e-12) {
        throw std::invalid_argument("effective_hamiltonian: projector must be diagonal with 0/1 entries");
      }
    }
    (std::abs(pm(i, i)) > 0.5 ? p_idx : q_idx).push_back(i);
  }
  if (p_idx.empty()) throw std::invalid_argument("effective_hamiltonian: empty projector");
  const Matrix& h = full.matrix();
  const auto np = static_cast<Eigen::Index>(p_idx.size());
  const auto nq = static_cast<Eigen::Index>(q_idx.size());
  Matrix php(np, np);
  RealVector ep(np);
  for (Eigen::Index i = 0; i < np; ++i) {
    ep(i) = h(p_idx[i], p_idx[i]).real();
    for (Eigen::Index j = 0; j < np; ++j) php(i, j) = h(p_idx[i], p_idx[j]);
  }
  Matrix c(np, nq);
  RealVector ev(nq);
  for (Eigen::Index i = 0; i < np; ++i) {
    for (Eigen::Index v = 0; v < nq; ++v) c(i, v) = h(p_idx[i], q_idx[v]);
  }
  if (partition == GapPartition::Diagonal) {
    for (Eigen::Index v = 0; v < nq; ++v) ev(v) = h(q_idx[v], q_idx[v]).real();
  } else if (nq > 0) {
    Matrix qhq(nq, nq);
    for (Eigen::Index a = 0; a < nq; ++a) {
      for (Eigen::Index b = 0; b < nq; ++b) qhq(a, b) = h(q_idx[a], q_idx[b]);
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(qhq);
    ev = es.eigenvalues();
    c = c * es.eigenvectors();
  }
  Reduced r = reduce(std::move(php), ep, c, ev);
  EffectiveHamiltonian out{Operator(std::move(r.h)), r.min_gap, r.max_coupling, 0.0, true};
  out.gap_ratio = r.max_coupling > 0.0 ? r.min_gap / r.max_coupling : std::numeric_limits<double>::infinity();
  out.gap_condition_met = out.gap_ratio > gap_factor;
  if (strict && !out.gap_condition_met) {
    throw GapConditionError("effective_hamiltonian: gap ratio " + std::to_string(out.gap_ratio) +
                                " below required " + std::to_string(gap_factor),
                            out.gap_ratio);
  }
  return out;
}

namespace {

// Fast diagonal-partition reduction built straight from the sparse entries.
class EffectiveBuilder {
 public:
  EffectiveBuilder(const Terms& terms, const std::vector<std::size_t>& p_idx, std::size_t dim)
      : p_idx_(p_idx), slot_(dim, -1) {
    for (std::size_t i = 0; i < p_idx.size(); ++i) slot_[p_idx[i]] = static_cast<int>(i);
    for (const auto& e : terms.entries()) {
      const int r = slot_[e.row];
      const int c = slot_[e.col];
      if (r >= 0 && c >= 0) inner_.push_back(e);
      if (r >= 0 && c < 0) couple_.push_back(e);  // <p| H |v>
    }
    std::sort(couple_.begin(), couple_.end(), [](const Entry& a, const Entry& b) { return a.col < b.col; });
  }

  Matrix build(const RealVector& diag, const LatticeParams& p, double* min_gap, double* max_coupling) const {
    const auto np = static_cast<Eigen::Index>(p_idx_.size());
    Matrix h = Matrix::Zero(np, np);
    for (Eigen::Index i = 0; i < np; ++i) h(i, i) = diag(static_cast<Eigen::Index>(p_idx_[static_cast<std::size_t>(i)]));
    for (const auto& e : inner_) h(slot_[e.row], slot_[e.col]) += Terms::value(e, p);
    std::vector<cplx> col(p_idx_.size());
    std::size_t k = 0;
    while (k < couple_.size()) {
      const std::size_t v = couple_[k].col;
      std::fill(col.begin(), col.end(), cplx(0.0));
      for (; k < couple_.size() && couple_[k].col == v; ++k) col[static_cast<std::size_t>(slot_[couple_[k].row])] += Terms::value(couple_[k], p);
      const double evv = diag(static_cast<Eigen::Index>(v));
      for (Eigen::Index i = 0; i < np; ++i) {
        const cplx ci = col[static_cast<std::size_t>(i)];
        if (ci == cplx(0.0)) continue;
        const double ei = diag(static_cast<Eigen::Index>(p_idx_[static_cast<std::size_t>(i)]));
        if (min_gap) *min_gap = std::min(*min_gap, std::abs(ei - evv));
        if (max_coupling) *max_coupling = std::max(*max_coupling, std::abs(ci));
        for (Eigen::Index j = 0; j < np; ++j) {
          const cplx cj = col[static_cast<std::size_t>(j)];
          if (cj == cplx(0.0)) continue;
          const double ej = diag(static_cast<Eigen::Index>(p_idx_[static_cast<std::size_t>(j)]));
          h(i, j) += 0.5 * ci * std::conj(cj) * (1.0 / (ei - evv) + 1.0 / (ej - evv));
        }
      }
    }
    return h;
  }

 private:
  std::vector<std::size_t> p_idx_;
  std::vector<int> slot_;
  std::vector<Entry> inner_;
  std::vector<Entry> couple_;
};

}  // namespace

LatticeGateReport simulate_lattice_gate(const ParamPath& path, const FockBasis& basis,
                                        const std::vector<int>& occupations, const LatticeControl& control,
                                        const std::optional<GateTarget>& ideal, const LatticeRunOptions& opt) {
  const auto p_idx = qubit_indices(basis, occupations);
  const auto nq = static_cast<Eigen::Index>(p_idx.size());
  if (ideal && static_cast<Eigen::Index>(ideal->dim()) != nq) {
    throw std::invalid_argument("simulate_lattice_gate: projector rank does not match the ideal gate");
  }
  const Terms terms(basis, basis.sites() == 1 ? 1 : opt.drive_site);

  // Idle frame: start-point parameters with hopping and drive switched off.
  LatticeParams idle = control(path.sample(0.0));
  idle.j_a = idle.j_b = idle.omega_k = 0.0;
  const RealVector idle_diag = terms.diagonal(idle);
  RealVector frame(nq);
  for (Eigen::Index i = 0; i < nq; ++i) frame(i) = idle_diag(static_cast<Eigen::Index>(p_idx[static_cast<std::size_t>(i)]));

  LatticeGateReport rep;
  Matrix block;
  if (opt.route == LatticeRoute::Full || basis.sites() == 1) {
    const auto d = static_cast<Eigen::Index>(basis.dim());
    Matrix init = Matrix::Zero(d, nq);
    for (Eigen::Index i = 0; i < nq; ++i) init(static_cast<Eigen::Index>(p_idx[static_cast<std::size_t>(i)]), i) = 1.0;
    const auto ev = evolve_columns(
        path, [&](std::span<const double> v) { return terms.dense(control(v)); }, opt.steps_per_unit_time, init);
    block.resize(nq, nq);
    for (Eigen::Index i = 0; i < nq; ++i) block.row(i) = ev.columns.row(static_cast<Eigen::Index>(p_idx[static_cast<std::size_t>(i)]));
    rep.max_unitarity_defect = ev.max_unitarity_defect;
    rep.steps = ev.step_count;
  } else {
    const EffectiveBuilder eb(terms, p_idx, basis.dim());
    double min_gap = std::numeric_limits<double>::infinity();
    double max_coupling = 0.0;
    const auto ev = evolve(
        path,
        [&](std::span<const double> v) {
          const LatticeParams p = control(v);
          return eb.build(terms.diagonal(p), p, &min_gap, &max_coupling);
        },
        opt.steps_per_unit_time);
    block = ev.unitary.matrix();
    rep.max_unitarity_defect = ev.max_unitarity_defect;
    rep.steps = ev.step_count;
    rep.gap_ratio = max_coupling > 0.0 ? min_gap / max_coupling : std::numeric_limits<double>::infinity();
  }
  const double t = path.total_duration();
  for (Eigen::Index i = 0; i < nq; ++i) block.row(i) *= std::polar(1.0, frame(i) * t);
  rep.leakage = std::max(0.0, 1.0 - block.squaredNorm() / static_cast<double>(nq));
  if (ideal) {
    rep.fidelity = fidelity(*ideal, block);
    rep.error = 1.0 - rep.fidelity;
  }
  rep.block = std::move(block);
  return rep;
}

}  // namespace qgate
