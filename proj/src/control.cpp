#include "oppnet/control.hpp"

#include <algorithm>
#include <stdexcept>

namespace oppnet {

double ewma(std::optional<double> acc, double reading, double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw std::invalid_argument("ewma alpha must be in (0, 1]");
  if (!acc) return reading;
  return (1.0 - alpha) * *acc + alpha * reading;
}

double rd_update(const ControllerParams& params, double rd, double congestion) {
  double next;
  if (params.mode == RdUpdateMode::Algorithm) {
    next = congestion >= params.congestion_threshold ? rd * params.k : rd + rd * params.k;
  } else {
    const double step = params.k * congestion;
    next = congestion >= params.congestion_threshold ? rd - step : rd + step;
  }
  return std::clamp(next, 1.0, params.rd_max);
}

bool ControllerState::fold_metric(MessageId id, double drop_count) {
  if (!folded.insert(id).second) return false;
  congestion = ewma(congestion, drop_count, params.alpha);
  return true;
}

bool ControllerState::fold_peer_directive(MessageId id, double rd) {
  if (!folded.insert(id).second) return false;
  rd_from_other_ctrls_avg = ewma(rd_from_other_ctrls_avg, rd, params.alpha);
  return true;
}

double close_controller_window(ControllerState& state) {
  double next = rd_update(state.params, state.rd_current, state.congestion.value_or(0.0));
  if (state.rd_from_other_ctrls_avg)
    next = std::clamp(ewma(next, *state.rd_from_other_ctrls_avg, state.params.alpha), 1.0,
                      state.params.rd_max);
  state.rd_current = next;
  state.congestion.reset();
  state.rd_from_other_ctrls_avg.reset();
  state.folded.clear();
  return next;
}

}  // namespace oppnet
