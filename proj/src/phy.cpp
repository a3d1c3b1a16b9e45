#include "slora/phy.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace slora {

int max_payload_bytes(int sf) {
  switch (sf) {
    case 7:
      return 221;
    case 9:
      return 115;
    case 12:
      return 51;
    default:
      return 255;
  }
}

void validate_frame(const FrameParams& frame) {
  if (frame.sf < 7 || frame.sf > 12) {
    throw std::domain_error("FrameParams: spreading factor out of 7..12");
  }
  if (frame.bandwidth_hz <= 0.0) {
    throw std::domain_error("FrameParams: bandwidth must be positive");
  }
  if (frame.coding_rate_denominator < 5 || frame.coding_rate_denominator > 8) {
    throw std::domain_error("FrameParams: coding rate denominator out of 5..8");
  }
  if (frame.preamble_symbols < 1) {
    throw std::domain_error("FrameParams: preamble too short");
  }
  if (frame.payload_bytes < 1 ||
      frame.payload_bytes > max_payload_bytes(frame.sf)) {
    throw std::domain_error("FrameParams: payload out of range for SF");
  }
  const int de = frame.low_data_rate_opt ? 1 : 0;
  if (frame.sf - 2 * de <= 0) {
    throw std::domain_error("FrameParams: SF too small for rate optimization");
  }
}

double symbol_time_s(int sf, double bandwidth_hz) {
  return static_cast<double>(1 << sf) / bandwidth_hz;
}

int payload_symbol_count(const FrameParams& frame) {
  validate_frame(frame);
  const int crc = frame.crc ? 1 : 0;
  const int implicit_header = frame.explicit_header ? 0 : 1;
  const int de = frame.low_data_rate_opt ? 1 : 0;
  const int numerator = 8 * frame.payload_bytes - 4 * frame.sf + 28 +
                        16 * crc - 20 * implicit_header;
  const int denominator = 4 * (frame.sf - 2 * de);
  int coded = 0;
  if (numerator > 0) {
    coded = (numerator + denominator - 1) / denominator *
            frame.coding_rate_denominator;
  }
  return 8 + coded;
}

double time_on_air(const FrameParams& frame) {
  const double t_sym = symbol_time_s(frame.sf, frame.bandwidth_hz);
  const double preamble =
      (static_cast<double>(frame.preamble_symbols) + 4.25) * t_sym;
  const double payload =
      static_cast<double>(payload_symbol_count(frame)) * t_sym;
  return preamble + payload;
}

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Delivered:
      return "delivered";
    case Outcome::IntraSlotCollision:
      return "intra_slot_collision";
    case Outcome::InterSlotCollision:
      return "inter_slot_collision";
    case Outcome::BelowSnr:
      return "below_snr";
    case Outcome::CaptureLoss:
      return "capture_loss";
  }
  return "unknown";
}

double SnrThresholds::for_sf(int sf) const {
  if (sf < 7 || sf > 12) {
    throw std::domain_error("SnrThresholds: spreading factor out of 7..12");
  }
  const double value = by_sf[static_cast<std::size_t>(sf - 7)];
  if (std::isnan(value)) {
    throw std::domain_error("SnrThresholds: no threshold configured for SF");
  }
  return value;
}

SnrThresholds SnrThresholds::defaults() {
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  return SnrThresholds{{-6.0, nan, -12.0, nan, nan, -20.0}};
}

std::vector<Outcome> resolve_receptions(std::span<TransmissionRecord> window,
                                        double sir_threshold_db,
                                        const SnrThresholds& thresholds,
                                        int preamble_survival_symbols,
                                        double bandwidth_hz) {
  const std::size_t n = window.size();
  std::vector<Outcome> outcomes(n, Outcome::Delivered);
  if (n == 0) {
    return outcomes;
  }

  double max_toa = 0.0;
  for (const auto& rec : window) {
    max_toa = std::max(max_toa, rec.toa_s);
  }

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> dominant(n, kNone);
  std::vector<bool> delivered(n, false);
  std::vector<bool> below_snr(n, false);

  // pass 1: physics, using only the window snapshot
  std::size_t left = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& f = window[i];
    const double f_end = f.start_time_s + f.toa_s;
    const double survivable =
        f.start_time_s + static_cast<double>(preamble_survival_symbols) *
                             symbol_time_s(f.sf, bandwidth_hz);

    while (left < n && window[left].start_time_s + max_toa <= f.start_time_s) {
      ++left;
    }
    double strongest = -std::numeric_limits<double>::infinity();
    std::size_t strongest_idx = kNone;
    for (std::size_t j = left; j < n && window[j].start_time_s < f_end; ++j) {
      if (j == i || window[j].sf != f.sf) {
        continue;
      }
      const auto& g = window[j];
      if (g.start_time_s + g.toa_s <= survivable) {
        continue;  // overlap confined to the survivable preamble head
      }
      if (g.snr_db > strongest) {
        strongest = g.snr_db;
        strongest_idx = j;
      }
    }
    dominant[i] = strongest_idx;
    below_snr[i] = f.snr_db < thresholds.for_sf(f.sf);
    const bool sir_ok =
        strongest_idx == kNone || f.snr_db - strongest >= sir_threshold_db;
    delivered[i] = !below_snr[i] && sir_ok;
  }

  // pass 2: labels, once every frame's fate is known
  for (std::size_t i = 0; i < n; ++i) {
    if (delivered[i]) {
      outcomes[i] = Outcome::Delivered;
    } else if (below_snr[i]) {
      outcomes[i] = Outcome::BelowSnr;
    } else {
      const std::size_t j = dominant[i];
      if (delivered[j]) {
        outcomes[i] = Outcome::CaptureLoss;
      } else if (window[i].interval_index == window[j].interval_index &&
                 window[i].slot_index == window[j].slot_index) {
        outcomes[i] = Outcome::IntraSlotCollision;
      } else {
        outcomes[i] = Outcome::InterSlotCollision;
      }
    }
    window[i].outcome = outcomes[i];
  }
  return outcomes;
}

}  // namespace slora
