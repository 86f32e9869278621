#pragma once

#include <stdexcept>
#include <string>

namespace ctac {

enum class Errc {
    infeasible_packing,
    pitch_error,
    mechanism_mismatch,
    dimension_mismatch,
    pose_out_of_area,
    cardinality_mismatch,
    degenerate_configuration,
    capacity_out_of_range,
    insufficient_data,
    parameter_error,
    empty_input,
    io_error,
    parse_error,
};

// Domain error carrying a machine-checkable code alongside the message.
class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& message) : std::runtime_error(message), code_(code) {}
    Errc code() const { return code_; }

  private:
    Errc code_;
};

}  // namespace ctac
