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


// Ancilla-assisted realisations of the qubit channels: a unitary on
// ancilla (x) data followed by an ancilla reset. Composite index is
// ancilla * 2 + data; the ancilla always starts in |g>.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qtrotter/liouvillian.h"
#include "qtrotter/linalg.h"

namespace qtrotter {

class Gate {
 public:
  enum class Kind { kAncillaRx, kCz, kCnotAncillaCtrl, kDataX, kResetAncilla };

  static Gate ancilla_rx(double theta);
  static Gate cz();
  static Gate cnot_ancilla_ctrl();
  static Gate data_x(double theta);
  static Gate reset_ancilla();

  Kind kind() const { return kind_; }
  double theta() const { return theta_; }
  bool is_unitary() const { return kind_ != Kind::kResetAncilla; }
  bool is_two_qubit() const { return kind_ == Kind::kCz || kind_ == Kind::kCnotAncillaCtrl; }
  /// 4x4 composite matrix. Throws std::logic_error for the reset.
  ComplexMatrix matrix() const;
  std::string name() const;

 private:
  Gate(Kind kind, double theta) : kind_(kind), theta_(theta) {}
  Kind kind_;
  double theta_;
};

/// exp(-i theta/2 sigma_x).
ComplexMatrix rx(double theta);

/// Ordered gate list ending in exactly one reset.
class DilationCircuit {
 public:
  DilationCircuit(std::vector<Gate> gates, std::string label);

  const std::vector<Gate>& gates() const { return gates_; }
  const std::string& label() const { return label_; }

 private:
  std::vector<Gate> gates_;
  std::string label_;
};

/// Circuit angles in radians; tau0 in us.
struct AngleParams {
  double theta1 = 0.0;  // dephasing
  double theta2 = 0.0;  // damping
  double theta3 = 0.0;  // rotation
  double tau0 = 3.56;

  void validate() const;
  static AngleParams from_degrees(double theta1_deg, double theta2_deg, double theta3_deg,
                                  double tau0);
};

struct NoiseParams {
  double p_grape = 0.0;          // data depolarization per GRAPE gate (data_x, adaptive cnot)
  double p_ancilla_decay = 0.0;  // ancilla |e> -> |g> per two-qubit gate

  void validate() const;
};

/// How the adaptive CNOT is simulated. Both give the same induced channel
/// because the ancilla is reset afterwards.
enum class CnotRealization { kCoherent, kMeasureFeedforward };

/// [ancilla_rx(theta1), cz, reset]
DilationCircuit dephasing_circuit(double theta1);
/// [ancilla_rx(theta2), cz, ancilla_rx(-theta2), cnot, reset]
DilationCircuit damping_circuit(double theta2);
/// [data_x(theta3), reset]
DilationCircuit rotation_circuit(double theta3);

/// Data-qubit channel induced by the circuit. With noise, ancilla damping
/// follows every two-qubit gate and data depolarization follows every
/// GRAPE-realised gate.
Superoperator induced_channel(const DilationCircuit& circuit,
                              const std::optional<NoiseParams>& noise = std::nullopt,
                              CnotRealization cnot = CnotRealization::kCoherent);

/// gamma_phi = -ln(2cos^2(theta1/2) - 1)/tau0, gamma1 = -ln(cos^2 theta2)/tau0,
/// omega = theta3 / (2 pi tau0). Throws std::domain_error for theta1 or
/// theta2 >= pi/2.
CanonicalRates angle_to_rates(const AngleParams& p);

/// Circuit angles that realise the given rates over one step of length dt.
AngleParams rates_to_angles(const CanonicalRates& rates, double dt);

struct CoherenceTimes {
  double t1 = 0.0;  // us, may be +inf
  double t2 = 0.0;  // us, may be +inf
};

/// 1/T1 = gamma1 + 1/T1_0, 1/T2 = gamma_phi + gamma1/2 + 1/T2_0.
/// Intrinsic times may be +inf.
CoherenceTimes predict_coherence(const AngleParams& p, double t1_0, double t2_0);

/// Adds intrinsic decoherence to simulated rates. Requires T2_0 <= 2 T1_0.
CanonicalRates with_intrinsic(const CanonicalRates& rates, double t1_0, double t2_0);

/// tau0 / -ln(1 - p): time scale of the depolarization accumulated by one
/// GRAPE gate per period.
double depolarization_time(double p_grape, double tau0);

/// Rates read off a qubit channel applied for a duration tau.
struct ChannelRates {
  double decay = 0.0;       // -ln(1 - P(1->0)) / tau
  double excitation = 0.0;  // -ln(1 - P(0->1)) / tau
  double coherence = 0.0;   // -ln|off-diagonal multiplier| / tau
};
ChannelRates extract_channel_rates(const Superoperator& s, double tau);

/// Choi distances between each noiseless circuit-induced channel and the
/// analytic channel at the rates given by angle_to_rates over tau0.
struct DilationCheck {
  double dephasing = 0.0;
  double damping = 0.0;
  double rotation = 0.0;

  double max() const;
};
DilationCheck verify_dilation(const AngleParams& p);

}  // namespace qtrotter
