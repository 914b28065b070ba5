#ifndef POLYTUNNEL_ERRORS_HPP
#define POLYTUNNEL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polytunnel {

enum class errc {
    non_positive,         // a parameter that must be > 0 (or N < 1) is not
    energy_cutoff,        // E >= 2 hbar^2 / (m mu0^2): no propagating incident wave
    not_tunneling,        // E >= V0: barrier-region roots not real and distinct
    singular_system,      // boundary-matching matrix numerically singular
    fit_singular,         // plane-wave fit matrix singular (theta at 0 or pi)
    degenerate_barrier,   // lambda^2 - 1 underflows: no barrier-region momentum
    empty_band,           // no sweep record inside the requested time window
    bad_config,           // CLI / config-file error
    io_failure,           // output could not be written
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

  private:
    errc code_;
};

}  // namespace polytunnel

#endif
