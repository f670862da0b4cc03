// Copyright 2026 The qtrotter Authors
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


#include "qtrotter/dilation.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qtrotter/channels.h"

namespace qtrotter {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

ComplexMatrix ket_bra(std::size_t i, std::size_t j) {
  std::vector<Complex> e(4);
  e[i * 2 + j] = 1.0;
  return {2, 2, std::move(e)};
}

ComplexMatrix conjugate(const ComplexMatrix& u, const ComplexMatrix& rho) {
  return u * rho * u.adjoint();
}

ComplexMatrix apply_kraus(const std::vector<ComplexMatrix>& kraus, const ComplexMatrix& rho) {
  ComplexMatrix out = ComplexMatrix::zeros(rho.rows(), rho.cols());
  for (const ComplexMatrix& k : kraus) out = out + conjugate(k, rho);
  return out;
}

std::vector<ComplexMatrix> on_ancilla(const KrausChannel& ch) {
  std::vector<ComplexMatrix> out;
  for (const ComplexMatrix& k : ch.operators()) out.push_back(kron(k, pauli::I()));
  return out;
}

std::vector<ComplexMatrix> on_data(const KrausChannel& ch) {
  std::vector<ComplexMatrix> out;
  for (const ComplexMatrix& k : ch.operators()) out.push_back(kron(pauli::I(), k));
  return out;
}

double neg_log(double x) { return -std::log(x) + 0.0; }

}  // namespace

ComplexMatrix rx(double theta) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  return {{c, Complex(0.0, -s)}, {Complex(0.0, -s), c}};
}

Gate Gate::ancilla_rx(double theta) { return {Kind::kAncillaRx, theta}; }
Gate Gate::cz() { return {Kind::kCz, 0.0}; }
Gate Gate::cnot_ancilla_ctrl() { return {Kind::kCnotAncillaCtrl, 0.0}; }
Gate Gate::data_x(double theta) { return {Kind::kDataX, theta}; }
Gate Gate::reset_ancilla() { return {Kind::kResetAncilla, 0.0}; }

ComplexMatrix Gate::matrix() const {
  switch (kind_) {
    case Kind::kAncillaRx:
      return kron(rx(theta_), pauli::I());
    case Kind::kCz:
      return ComplexMatrix::diagonal({1.0, 1.0, 1.0, -1.0});
    case Kind::kCnotAncillaCtrl:
      return kron(ket_bra(0, 0), pauli::I()) + kron(ket_bra(1, 1), pauli::X());
    case Kind::kDataX:
      return kron(pauli::I(), rx(theta_));
    case Kind::kResetAncilla:
      break;
  }
  throw std::logic_error("Gate::matrix: reset has no unitary matrix");
}

std::string Gate::name() const {
  switch (kind_) {
    case Kind::kAncillaRx: return "ancilla_rx(" + std::to_string(theta_) + ")";
    case Kind::kCz: return "cz";
    case Kind::kCnotAncillaCtrl: return "cnot_ancilla_ctrl";
    case Kind::kDataX: return "data_x(" + std::to_string(theta_) + ")";
    case Kind::kResetAncilla: return "reset_ancilla";
  }
  return "?";
}

DilationCircuit::DilationCircuit(std::vector<Gate> gates, std::string label)
    : gates_(std::move(gates)), label_(std::move(label)) {
  std::size_t resets = 0;
  for (const Gate& g : gates_) {
    if (g.kind() == Gate::Kind::kResetAncilla) ++resets;
    if (!std::isfinite(g.theta())) throw std::invalid_argument("DilationCircuit: non-finite angle");
  }
  if (resets != 1 || gates_.back().kind() != Gate::Kind::kResetAncilla) {
    throw std::invalid_argument("DilationCircuit '" + label_ +
                                "': needs exactly one reset_ancilla, placed last");
  }
}

void AngleParams::validate() const {
  if (!(theta1 >= 0.0 && theta1 <= kHalfPi)) {
    throw std::invalid_argument("AngleParams: theta1 must lie in [0, pi/2]");
  }
  if (!(theta2 >= 0.0 && theta2 <= kHalfPi)) {
    throw std::invalid_argument("AngleParams: theta2 must lie in [0, pi/2]");
  }
  if (!std::isfinite(theta3)) throw std::invalid_argument("AngleParams: theta3 must be finite");
  if (!(tau0 > 0.0) || !std::isfinite(tau0)) {
    throw std::invalid_argument("AngleParams: tau0 must be positive");
  }
}

AngleParams AngleParams::from_degrees(double theta1_deg, double theta2_deg, double theta3_deg,
                                      double tau0) {
  constexpr double k = std::numbers::pi / 180.0;
  return {theta1_deg * k, theta2_deg * k, theta3_deg * k, tau0};
}

void NoiseParams::validate() const {
  if (!(p_grape >= 0.0 && p_grape <= 1.0)) {
    throw std::invalid_argument("NoiseParams: p_grape must be in [0, 1]");
  }
  if (!(p_ancilla_decay >= 0.0 && p_ancilla_decay <= 1.0)) {
    throw std::invalid_argument("NoiseParams: p_ancilla_decay must be in [0, 1]");
  }
}

DilationCircuit dephasing_circuit(double theta1) {
  return DilationCircuit({Gate::ancilla_rx(theta1), Gate::cz(), Gate::reset_ancilla()},
                         "dephasing");
}

DilationCircuit damping_circuit(double theta2) {
  return DilationCircuit({Gate::ancilla_rx(theta2), Gate::cz(), Gate::ancilla_rx(-theta2),
                          Gate::cnot_ancilla_ctrl(), Gate::reset_ancilla()},
                         "damping");
}

DilationCircuit rotation_circuit(double theta3) {
  return DilationCircuit({Gate::data_x(theta3), Gate::reset_ancilla()}, "rotation");
}

Superoperator induced_channel(const DilationCircuit& circuit,
                              const std::optional<NoiseParams>& noise, CnotRealization cnot) {
  if (noise) noise->validate();
  const ComplexMatrix ground = ket_bra(0, 0);
  std::vector<ComplexMatrix> ancilla_decay, data_depol;
  if (noise) {
    ancilla_decay = on_ancilla(amplitude_damping_channel(noise->p_ancilla_decay));
    data_depol = on_data(depolarizing_channel(noise->p_grape));
  }
  const std::vector<ComplexMatrix> feedforward = {
      kron(ket_bra(0, 0), pauli::I()), kron(ket_bra(1, 1), pauli::X())};

  // Column (i, j) of the superoperator is the circuit's action on |i><j|.
  std::vector<Complex> columns(16);
  for (std::size_t j = 0; j < 2; ++j) {
    for (std::size_t i = 0; i < 2; ++i) {
      ComplexMatrix rho = kron(ground, ket_bra(i, j));
      for (const Gate& g : circuit.gates()) {
        if (g.kind() == Gate::Kind::kResetAncilla) {
          rho = kron(ground, partial_trace(rho, 2, 2, Subsystem::B));
          continue;
        }
        if (g.kind() == Gate::Kind::kCnotAncillaCtrl && cnot == CnotRealization::kMeasureFeedforward) {
          rho = apply_kraus(feedforward, rho);
        } else {
          rho = conjugate(g.matrix(), rho);
        }
        if (noise) {
          if (g.is_two_qubit()) rho = apply_kraus(ancilla_decay, rho);
          if (g.kind() == Gate::Kind::kDataX || g.kind() == Gate::Kind::kCnotAncillaCtrl) {
            rho = apply_kraus(data_depol, rho);
          }
        }
      }
      const ComplexMatrix out = vectorize(partial_trace(rho, 2, 2, Subsystem::B));
      const std::size_t col = i + j * 2;
      for (std::size_t r = 0; r < 4; ++r) columns[r * 4 + col] = out(r, 0);
    }
  }
  return {2, ComplexMatrix(4, 4, std::move(columns))};
}

CanonicalRates angle_to_rates(const AngleParams& p) {
  p.validate();
  if (p.theta1 >= kHalfPi) {
    throw std::domain_error("angle_to_rates: theta1 must be < pi/2 (2cos^2(theta1/2) - 1 <= 0)");
  }
  if (p.theta2 >= kHalfPi) {
    throw std::domain_error("angle_to_rates: theta2 must be < pi/2 (cos^2 theta2 = 0)");
  }
  const double c1 = std::cos(p.theta1 / 2.0);
  const double c2 = std::cos(p.theta2);
  CanonicalRates r;
  r.gamma_phi = neg_log(2.0 * c1 * c1 - 1.0) / p.tau0;
  r.gamma1 = neg_log(c2 * c2) / p.tau0;
  r.omega = p.theta3 / (2.0 * std::numbers::pi * p.tau0);
  return r;
}

AngleParams rates_to_angles(const CanonicalRates& rates, double dt) {
  rates.validate();
  if (!(dt > 0.0)) throw std::invalid_argument("rates_to_angles: dt must be positive");
  AngleParams p;
  p.tau0 = dt;
  p.theta1 = std::acos(std::exp(-rates.gamma_phi * dt));
  p.theta2 = std::acos(std::exp(-rates.gamma1 * dt / 2.0));
  p.theta3 = 2.0 * std::numbers::pi * rates.omega * dt;
  return p;
}

CoherenceTimes predict_coherence(const AngleParams& p, double t1_0, double t2_0) {
  if (!(t1_0 > 0.0) || !(t2_0 > 0.0)) {
    throw std::invalid_argument("predict_coherence: intrinsic times must be positive");
  }
  const CanonicalRates r = angle_to_rates(p);
  const double inv_t1 = r.gamma1 + 1.0 / t1_0;
  const double inv_t2 = r.gamma_phi + r.gamma1 / 2.0 + 1.0 / t2_0;
  const double inf = std::numeric_limits<double>::infinity();
  return {inv_t1 > 0.0 ? 1.0 / inv_t1 : inf, inv_t2 > 0.0 ? 1.0 / inv_t2 : inf};
}

CanonicalRates with_intrinsic(const CanonicalRates& rates, double t1_0, double t2_0) {
  rates.validate();
  if (!(t1_0 > 0.0) || !(t2_0 > 0.0)) {
    throw std::invalid_argument("with_intrinsic: intrinsic times must be positive");
  }
  const double extra_phi = 1.0 / t2_0 - 0.5 / t1_0;
  if (extra_phi < -1e-15) {
    throw std::invalid_argument("with_intrinsic: T2_0 must not exceed 2 T1_0");
  }
  CanonicalRates out = rates;
  out.gamma1 += 1.0 / t1_0;
  out.gamma_phi += std::max(0.0, extra_phi);
  return out;
}

double depolarization_time(double p_grape, double tau0) {
  if (!(p_grape > 0.0 && p_grape < 1.0)) {
    throw std::invalid_argument("depolarization_time: p_grape must be in (0, 1)");
  }
  if (!(tau0 > 0.0)) throw std::invalid_argument("depolarization_time: tau0 must be positive");
  return tau0 / -std::log1p(-p_grape);
}

ChannelRates extract_channel_rates(const Superoperator& s, double tau) {
  if (s.dim() != 2) throw std::invalid_argument("extract_channel_rates: qubit channel required");
  if (!(tau > 0.0)) throw std::invalid_argument("extract_channel_rates: tau must be positive");
  const ComplexMatrix& m = s.matrix();
  const double p_decay = m(0, 3).real();       // <0| E(|1><1|) |0>
  const double p_excite = m(3, 0).real();      // <1| E(|0><0|) |1>
  const double coherence = std::abs(m(2, 2));  // E(|0><1|)_{01}
  ChannelRates r;
  r.decay = neg_log(1.0 - p_decay) / tau;
  r.excitation = neg_log(1.0 - p_excite) / tau;
  r.coherence = neg_log(coherence) / tau;
  return r;
}

double DilationCheck::max() const { return std::max({dephasing, damping, rotation}); }

DilationCheck verify_dilation(const AngleParams& p) {
  const CanonicalRates r = angle_to_rates(p);
  DilationCheck c;
  c.dephasing = channel_distance(induced_channel(dephasing_circuit(p.theta1)),
                                 dephasing_channel(r.gamma_phi, p.tau0));
  c.damping = channel_distance(induced_channel(damping_circuit(p.theta2)),
                               damping_channel(r.gamma1, p.tau0));
  c.rotation = channel_distance(induced_channel(rotation_circuit(p.theta3)),
                                unitary_channel(rx(2.0 * std::numbers::pi * r.omega * p.tau0)));
  return c;
}

}  // namespace qtrotter
