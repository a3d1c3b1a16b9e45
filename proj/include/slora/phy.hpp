#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace slora {

struct FrameParams {
  int sf = 7;  // spreading factor, 7..12
  double bandwidth_hz = 125000.0;
  int coding_rate_denominator = 8;  // 4/5 .. 4/8 -> 5..8
  int preamble_symbols = 8;
  int payload_bytes = 10;
  bool explicit_header = true;
  bool crc = true;
  bool low_data_rate_opt = false;
};

// Per-SF application payload ceilings for the fixed 125 kHz channel plan.
int max_payload_bytes(int sf);

// Throws std::domain_error on out-of-range fields.
void validate_frame(const FrameParams& frame);

double symbol_time_s(int sf, double bandwidth_hz);

// Number of payload symbols after the preamble (SX1272 airtime formula).
int payload_symbol_count(const FrameParams& frame);

// Full frame airtime: (preamble_symbols + 4.25 + payload symbols) symbol
// periods.
double time_on_air(const FrameParams& frame);

enum class Outcome : std::uint8_t {
  Delivered = 0,
  IntraSlotCollision = 1,
  InterSlotCollision = 2,
  BelowSnr = 3,
  CaptureLoss = 4,
};

inline constexpr int kOutcomeCount = 5;

const char* outcome_name(Outcome o);

// One frame as seen at the gateway. start_time_s already includes the
// device's propagation delay so that overlap decisions happen in arrival
// time, which is what makes inter-slot collisions sensitive to both timing
// offsets and distance.
struct TransmissionRecord {
  std::uint32_t device_id = 0;
  int sf = 7;
  double start_time_s = 0.0;
  double toa_s = 0.0;
  double snr_db = 0.0;
  std::int64_t interval_index = 0;  // diagnostics
  std::int32_t slot_index = 0;      // diagnostics; 0 in ALOHA mode
  Outcome outcome = Outcome::Delivered;
};

struct SnrThresholds {
  // indexed by sf - 7; NaN marks an unconfigured spreading factor
  std::array<double, 6> by_sf;

  double for_sf(int sf) const;
  static SnrThresholds defaults();  // -6 / -12 / -20 dB at SF 7 / 9 / 12
};

// Resolves outcomes for a window of time-sorted frames under the
// dominant-interferer capture model:
//  - different spreading factors are orthogonal and never interfere,
//  - a frame needs SNR at or above its per-SF threshold,
//  - overlap confined to the first preamble_survival_symbols symbols of the
//    frame is harmless; any same-SF frame overlapping beyond that point is an
//    interferer,
//  - the frame must exceed the single strongest interferer by
//    sir_threshold_db; interferers are counted whether or not they themselves
//    decode.
// Collision labels: a frame that loses to an interferer which itself decodes
// is a capture loss; when neither survives, the loss is intra- or inter-slot
// depending on the dominant interferer's slot assignment.
std::vector<Outcome> resolve_receptions(std::span<TransmissionRecord> window,
                                        double sir_threshold_db,
                                        const SnrThresholds& thresholds,
                                        int preamble_survival_symbols,
                                        double bandwidth_hz);

}  // namespace slora
