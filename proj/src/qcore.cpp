// Copyright 2026 The qowlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qowlab/qcore.hpp"

#include <cmath>

namespace qowlab {

namespace {

void check_dim(int dim, const char* who) {
  require(dim >= 1, ErrorCode::invalid_argument,
          std::string(who) + ": dimension must be positive");
  require(dim <= kMaxDim, ErrorCode::dimension_limit,
          std::string(who) + ": dimension exceeds the supported maximum");
}

bool is_power_of_two(int v) { return v > 0 && (v & (v - 1)) == 0; }

}  // namespace

DensityMatrix::DensityMatrix(Cmat m) : m_(std::move(m)) {
  require(m_.rows() == m_.cols(), ErrorCode::invalid_argument,
          "density matrix must be square");
  check_dim(static_cast<int>(m_.rows()), "DensityMatrix");
  double herm_dev = (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
  require(herm_dev <= kInvariantTol, ErrorCode::numeric_check,
          "density matrix is not Hermitian");
  // Symmetrize so downstream eigensolves see an exactly Hermitian operator.
  m_ = 0.5 * (m_ + m_.adjoint().eval());
  require(std::abs(m_.trace().real() - 1.0) <= kInvariantTol &&
              std::abs(m_.trace().imag()) <= kInvariantTol,
          ErrorCode::numeric_check, "density matrix trace is not 1");
  Eigen::SelfAdjointEigenSolver<Cmat> es(m_, Eigen::EigenvaluesOnly);
  require(es.eigenvalues().minCoeff() >= -kInvariantTol,
          ErrorCode::numeric_check, "density matrix has a negative eigenvalue");
}

DensityMatrix DensityMatrix::pure(const Cvec& psi) {
  double n = psi.norm();
  require(std::abs(n - 1.0) <= kInvariantTol, ErrorCode::numeric_check,
          "pure state is not normalized");
  return DensityMatrix(psi * psi.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
  check_dim(dim, "maximally_mixed");
  return DensityMatrix(Cmat::Identity(dim, dim) / static_cast<double>(dim));
}

DensityMatrix DensityMatrix::basis_state(int dim, int index) {
  check_dim(dim, "basis_state");
  require(index >= 0 && index < dim, ErrorCode::invalid_argument,
          "basis_state: index out of range");
  Cvec v = Cvec::Zero(dim);
  v(index) = 1.0;
  return DensityMatrix::pure(v);
}

PureState::PureState(Cvec a) : amps(std::move(a)) {
  check_dim(static_cast<int>(amps.size()), "PureState");
  require(std::abs(amps.norm() - 1.0) <= kInvariantTol,
          ErrorCode::numeric_check, "state vector is not normalized");
}

TwoOutcomeMeasurement::TwoOutcomeMeasurement(int system_dim_,
                                             int ancilla_qubits_,
                                             int output_bit_, Cmat unitary_)
    : system_dim(system_dim_),
      ancilla_qubits(ancilla_qubits_),
      output_bit(output_bit_),
      unitary(std::move(unitary_)) {
  require(system_dim >= 1, ErrorCode::invalid_argument,
          "measurement system dimension must be positive");
  require(ancilla_qubits >= 0 && ancilla_qubits <= 30,
          ErrorCode::invalid_argument, "bad ancilla count");
  check_dim(dilated_dim(), "TwoOutcomeMeasurement");
  if (output_bit >= ancilla_qubits) {
    require(is_power_of_two(system_dim), ErrorCode::invalid_argument,
            "system-bit output requires a power-of-two system dimension");
    int sys_bits = 0;
    while ((1 << sys_bits) < system_dim) ++sys_bits;
    require(output_bit < ancilla_qubits + sys_bits,
            ErrorCode::invalid_argument, "output bit out of range");
  }
  require(output_bit >= 0, ErrorCode::invalid_argument,
          "output bit out of range");
  int d = dilated_dim();
  require(unitary.rows() == d && unitary.cols() == d,
          ErrorCode::invalid_argument,
          "measurement unitary has the wrong dimension");
  double dev = (unitary.adjoint() * unitary - Cmat::Identity(d, d))
                   .cwiseAbs()
                   .maxCoeff();
  require(dev <= kInvariantTol, ErrorCode::numeric_check,
          "measurement dilation is not unitary");
}

bool TwoOutcomeMeasurement::output_set(int z) const {
  if (output_bit < ancilla_qubits) return (z >> output_bit) & 1;
  int s = z >> ancilla_qubits;
  return (s >> (output_bit - ancilla_qubits)) & 1;
}

TwoOutcomeMeasurement TwoOutcomeMeasurement::from_accept_predicate(
    int system_dim, const std::function<bool(int)>& accept) {
  check_dim(system_dim * 2, "from_accept_predicate");
  int d = system_dim * 2;
  Cmat u = Cmat::Zero(d, d);
  for (int s = 0; s < system_dim; ++s) {
    int flip = accept(s) ? 1 : 0;
    for (int w = 0; w < 2; ++w) u(s * 2 + (w ^ flip), s * 2 + w) = 1.0;
  }
  return TwoOutcomeMeasurement(system_dim, 1, 0, std::move(u));
}

TwoOutcomeMeasurement TwoOutcomeMeasurement::computational(int qubits,
                                                           int qubit) {
  require(qubits >= 1 && qubit >= 0 && qubit < qubits,
          ErrorCode::invalid_argument, "computational: bad qubit index");
  int d = 1 << qubits;
  check_dim(d, "computational");
  return TwoOutcomeMeasurement(d, 0, qubit, Cmat::Identity(d, d));
}

double trace_distance(const Cmat& rho, const Cmat& sigma) {
  require(rho.rows() == rho.cols() && sigma.rows() == sigma.cols() &&
              rho.rows() == sigma.rows(),
          ErrorCode::invalid_argument,
          "trace_distance: shape mismatch");
  Cmat diff = rho - sigma;
  double herm_dev = (diff - diff.adjoint()).cwiseAbs().maxCoeff();
  require(herm_dev <= 1e-8, ErrorCode::numeric_check,
          "trace_distance: difference is not Hermitian");
  diff = 0.5 * (diff + diff.adjoint().eval());
  Eigen::SelfAdjointEigenSolver<Cmat> es(diff, Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return trace_distance(rho.mat(), sigma.mat());
}

Cmat partial_trace(const Cmat& m, const std::vector<int>& dims,
                   const std::vector<bool>& keep) {
  require(dims.size() == keep.size(), ErrorCode::invalid_argument,
          "partial_trace: dims/keep mismatch");
  long total = 1;
  for (int d : dims) {
    require(d >= 1, ErrorCode::invalid_argument, "partial_trace: bad factor");
    total *= d;
  }
  require(m.rows() == total && m.cols() == total, ErrorCode::invalid_argument,
          "partial_trace: matrix does not match factors");

  int kept_dim = 1, traced_dim = 1;
  for (size_t i = 0; i < dims.size(); ++i)
    (keep[i] ? kept_dim : traced_dim) *= dims[i];

  // Strides of each factor in the full index, and the strides of the
  // kept/traced sub-indices they map to.
  int n = static_cast<int>(dims.size());
  std::vector<long> full_stride(n), sub_stride(n);
  long fs = 1;
  for (int i = n - 1; i >= 0; --i) {
    full_stride[i] = fs;
    fs *= dims[i];
  }
  long ks = 1, ts = 1;
  for (int i = n - 1; i >= 0; --i) {
    if (keep[i]) {
      sub_stride[i] = ks;
      ks *= dims[i];
    } else {
      sub_stride[i] = ts;
      ts *= dims[i];
    }
  }

  // Enumerate full indices once, bucketing into (kept, traced) coordinates.
  std::vector<long> kept_of(total), traced_of(total);
  for (long z = 0; z < total; ++z) {
    long rem = z, k = 0, t = 0;
    for (int i = 0; i < n; ++i) {
      long digit = rem / full_stride[i];
      rem %= full_stride[i];
      if (keep[i])
        k += digit * sub_stride[i];
      else
        t += digit * sub_stride[i];
    }
    kept_of[z] = k;
    traced_of[z] = t;
  }

  Cmat out = Cmat::Zero(kept_dim, kept_dim);
  for (long r = 0; r < total; ++r)
    for (long c = 0; c < total; ++c)
      if (traced_of[r] == traced_of[c])
        out(kept_of[r], kept_of[c]) += m(r, c);
  return out;
}

PureState purify(const DensityMatrix& rho) {
  int d = rho.dim();
  check_dim(d * d, "purify");
  Eigen::SelfAdjointEigenSolver<Cmat> es(rho.mat());
  Cvec psi = Cvec::Zero(static_cast<long>(d) * d);
  for (int i = 0; i < d; ++i) {
    double lam = es.eigenvalues()(i);
    if (lam < 0.0) lam = 0.0;  // clip the tolerated [-1e-9, 0) band
    if (lam == 0.0) continue;
    double s = std::sqrt(lam);
    for (int r = 0; r < d; ++r) psi(static_cast<long>(r) * d + i) += s * es.eigenvectors()(r, i);
  }
  psi /= psi.norm();
  return PureState(psi);
}

Cvec apply_on_factors(const Cvec& state, const Cmat& op,
                      const std::vector<int>& dims,
                      const std::vector<int>& targets) {
  long total = 1;
  for (int d : dims) total *= d;
  require(state.size() == total, ErrorCode::invalid_argument,
          "apply_on_factors: state does not match factors");
  long tdim = 1;
  for (int t : targets) {
    require(t >= 0 && t < static_cast<int>(dims.size()),
            ErrorCode::invalid_argument, "apply_on_factors: bad target");
    tdim *= dims[t];
  }
  require(op.rows() == tdim && op.cols() == tdim, ErrorCode::invalid_argument,
          "apply_on_factors: operator does not match targets");

  int n = static_cast<int>(dims.size());
  std::vector<long> full_stride(n);
  long fs = 1;
  for (int i = n - 1; i >= 0; --i) {
    full_stride[i] = fs;
    fs *= dims[i];
  }
  // Strides of the target sub-index in listed order (first target most
  // significant).
  int k = static_cast<int>(targets.size());
  std::vector<long> tgt_stride(k);
  long ts = 1;
  for (int i = k - 1; i >= 0; --i) {
    tgt_stride[i] = ts;
    ts *= dims[targets[i]];
  }

  std::vector<bool> is_target(n, false);
  for (int t : targets) is_target[t] = true;

  // Enumerate the non-target coordinates; for each, gather the target block,
  // multiply, scatter back.
  long rest_total = total / tdim;
  std::vector<int> rest_factors;
  for (int i = 0; i < n; ++i)
    if (!is_target[i]) rest_factors.push_back(i);

  Cvec out = Cvec::Zero(total);
  std::vector<long> digits(n, 0);
  Cvec block(tdim), blockout(tdim);
  for (long rest = 0; rest < rest_total; ++rest) {
    long rem = rest, base = 0;
    for (size_t ri = 0; ri < rest_factors.size(); ++ri) {
      int f = rest_factors[ri];
      long size = dims[f];
      long digit = rem % size;
      rem /= size;
      base += digit * full_stride[f];
    }
    for (long bi = 0; bi < tdim; ++bi) {
      long rem2 = bi, offset = 0;
      for (int ti = 0; ti < k; ++ti) {
        long digit = rem2 / tgt_stride[ti];
        rem2 %= tgt_stride[ti];
        offset += digit * full_stride[targets[ti]];
      }
      block(bi) = state(base + offset);
    }
    blockout.noalias() = op * block;
    for (long bi = 0; bi < tdim; ++bi) {
      long rem2 = bi, offset = 0;
      for (int ti = 0; ti < k; ++ti) {
        long digit = rem2 / tgt_stride[ti];
        rem2 %= tgt_stride[ti];
        offset += digit * full_stride[targets[ti]];
      }
      out(base + offset) = blockout(bi);
    }
  }
  return out;
}

namespace {

// The ancilla starts in |0...0>, so the evolved dilated state is
// (U E) rho (U E)* with E the embedding |s> -> |s * 2^a>. Everything below
// works with the dilated x system slice B = U E instead of full dilated
// matrices, which keeps the cost at dilated^2 * system instead of dilated^3.
Cmat embedded_columns(const TwoOutcomeMeasurement& m) {
  int a = 1 << m.ancilla_qubits;
  Cmat b(m.dilated_dim(), m.system_dim);
  for (int s = 0; s < m.system_dim; ++s)
    b.col(s) = m.unitary.col(static_cast<long>(s) * a);
  return b;
}

// Diagonal of B rho B*, i.e. the outcome mass per dilated basis state.
Eigen::VectorXd evolved_diagonal(const Cmat& b, const Cmat& rho) {
  Cmat m = b * rho;
  return (m.array() * b.conjugate().array()).rowwise().sum().real();
}

// Unnormalized branch on the original system: project the output bit to
// `outcome`, uncompute U and trace the ancillas. With F = U* Pi_outcome B
// the result is Tr_anc(F rho F*), assembled per ancilla value.
Cmat reduced_branch(const TwoOutcomeMeasurement& m, const Cmat& b,
                    const Cmat& rho, int outcome) {
  int d = m.system_dim;
  int a = 1 << m.ancilla_qubits;
  Cmat pb = b;
  for (int z = 0; z < m.dilated_dim(); ++z)
    if (m.output_set(z) != (outcome == 1)) pb.row(z).setZero();
  Cmat f = m.unitary.adjoint() * pb;
  Cmat g = f * rho;
  Cmat out = Cmat::Zero(d, d);
  Cmat fw(d, d), gw(d, d);
  for (int w = 0; w < a; ++w) {
    for (int s = 0; s < d; ++s) {
      long z = static_cast<long>(s) * a + w;
      gw.row(s) = g.row(z);
      fw.row(s) = f.row(z);
    }
    out += gw * fw.adjoint();
  }
  return out;
}

void check_state_matches(const DensityMatrix& rho,
                         const TwoOutcomeMeasurement& m) {
  require(rho.dim() == m.system_dim, ErrorCode::invalid_argument,
          "measurement does not match state dimension");
}

}  // namespace

MeasurementOutcome apply_measurement(const DensityMatrix& rho,
                                     const TwoOutcomeMeasurement& m) {
  check_state_matches(rho, m);
  Cmat b = embedded_columns(m);
  Eigen::VectorXd diag = evolved_diagonal(b, rho.mat());
  MeasurementOutcome out;
  for (int z = 0; z < m.dilated_dim(); ++z)
    (m.output_set(z) ? out.p1 : out.p0) += diag(z);
  require(std::abs(out.p0 + out.p1 - 1.0) <= kInvariantTol,
          ErrorCode::numeric_check, "branch probabilities do not sum to 1");
  if (out.p0 > kInvariantTol)
    out.post0 = DensityMatrix(reduced_branch(m, b, rho.mat(), 0) / out.p0);
  if (out.p1 > kInvariantTol)
    out.post1 = DensityMatrix(reduced_branch(m, b, rho.mat(), 1) / out.p1);
  return out;
}

double response_probability(const DensityMatrix& rho,
                            const TwoOutcomeMeasurement& m) {
  check_state_matches(rho, m);
  Cmat b = embedded_columns(m);
  Eigen::VectorXd diag = evolved_diagonal(b, rho.mat());
  double p = 0.0;
  for (int z = 0; z < m.dilated_dim(); ++z)
    if (m.output_set(z)) p += diag(z);
  return p;
}

DensityMatrix postselect(const DensityMatrix& rho,
                         const TwoOutcomeMeasurement& m, int outcome,
                         double* branch_prob) {
  require(outcome == 0 || outcome == 1, ErrorCode::invalid_argument,
          "postselect: outcome must be 0 or 1");
  check_state_matches(rho, m);
  Cmat b = embedded_columns(m);
  Eigen::VectorXd diag = evolved_diagonal(b, rho.mat());
  double p = 0.0;
  for (int z = 0; z < m.dilated_dim(); ++z)
    if (m.output_set(z) == (outcome == 1)) p += diag(z);
  require(p > kInvariantTol, ErrorCode::zero_probability,
          "postselect: branch has zero probability");
  if (branch_prob) *branch_prob = p;
  return DensityMatrix(reduced_branch(m, b, rho.mat(), outcome) / p);
}

RecoveryResult measure_and_recover(const DensityMatrix& rho,
                                   const TwoOutcomeMeasurement& m) {
  require(rho.dim() == m.system_dim, ErrorCode::invalid_argument,
          "measurement does not match state dimension");
  int d = rho.dim();
  int adim = 1 << m.ancilla_qubits;
  long total = static_cast<long>(d) * d * adim;
  check_dim(static_cast<int>(total), "measure_and_recover");

  // |Psi> = purify(rho) (x) |0...0>, factors [system d][purifier d][anc 2^a].
  PureState pur = purify(rho);
  Cvec full = Cvec::Zero(total);
  for (long i = 0; i < static_cast<long>(d) * d; ++i) full(i * adim) = pur.amps(i);

  std::vector<int> dims{d, d, adim};
  Cvec evolved = apply_on_factors(full, m.unitary, dims, {0, 2});

  // Split by the output bit. The bit lives in the (system, ancilla) part;
  // translate to the full index: z = (s*d + r)*adim + w where s is the system
  // index, r the purifier, w the ancilla bits.
  auto out_set = [&](long z) {
    long w = z % adim;
    long s = z / (static_cast<long>(d) * adim);
    int dilated = static_cast<int>(s) * adim + static_cast<int>(w);
    return m.output_set(dilated);
  };
  double p1 = 0.0;
  for (long z = 0; z < total; ++z)
    if (out_set(z)) p1 += std::norm(evolved(z));
  double p0 = 1.0 - p1;

  // Dephase in the outcome: sigma = sum_b P_b |Psi'><Psi'| P_b. Computed
  // densely so the advertised trace-distance value is measured, not assumed.
  Cvec branch0 = evolved, branch1 = evolved;
  for (long z = 0; z < total; ++z) {
    if (out_set(z))
      branch0(z) = 0.0;
    else
      branch1(z) = 0.0;
  }
  Cmat sigma = branch0 * branch0.adjoint() + branch1 * branch1.adjoint();
  Cmat undisturbed = evolved * evolved.adjoint();
  double intermediate = trace_distance(sigma, undisturbed);

  // Rotate back and restrict to the system factor.
  Cvec back0 = apply_on_factors(branch0, m.unitary.adjoint(), dims, {0, 2});
  Cvec back1 = apply_on_factors(branch1, m.unitary.adjoint(), dims, {0, 2});
  Cmat rec = Cmat::Zero(d, d);
  long rest = static_cast<long>(d) * adim;
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) {
      Cplx acc = 0.0;
      for (long q = 0; q < rest; ++q)
        acc += back0(r * rest + q) * std::conj(back0(c * rest + q)) +
               back1(r * rest + q) * std::conj(back1(c * rest + q));
      rec(r, c) = acc;
    }

  RecoveryResult result{p1, intermediate, DensityMatrix(rec)};
  (void)p0;
  return result;
}

Cmat random_unitary(int dim, Rng& rng) {
  check_dim(dim, "random_unitary");
  Cmat g(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) g(r, c) = Cplx(rng.normal(), rng.normal());
  Eigen::HouseholderQR<Cmat> qr(g);
  Cmat q = qr.householderQ();
  Cmat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < dim; ++i) {
    Cplx diag = r(i, i);
    Cplx phase = diag == Cplx(0.0) ? Cplx(1.0) : diag / std::abs(diag);
    q.col(i) *= phase;
  }
  return q;
}

DensityMatrix random_density(int dim, Rng& rng) {
  check_dim(dim, "random_density");
  Cmat g(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) g(r, c) = Cplx(rng.normal(), rng.normal());
  Cmat rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix(rho);
}

DensityMatrix random_pure_density(int dim, Rng& rng) {
  check_dim(dim, "random_pure_density");
  Cvec v(dim);
  for (int i = 0; i < dim; ++i) v(i) = Cplx(rng.normal(), rng.normal());
  v /= v.norm();
  return DensityMatrix::pure(v);
}

}  // namespace qowlab
