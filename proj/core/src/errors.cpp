#include "polytunnel/errors.hpp"

namespace polytunnel {

const char* errc_name(errc code) {
    switch (code) {
        case errc::non_positive: return "NonPositive";
        case errc::energy_cutoff: return "EnergyCutoffViolation";
        case errc::not_tunneling: return "NotTunneling";
        case errc::singular_system: return "SingularSystem";
        case errc::fit_singular: return "FitSingular";
        case errc::degenerate_barrier: return "DegenerateBarrier";
        case errc::empty_band: return "EmptyBand";
        case errc::bad_config: return "ConfigError";
        case errc::io_failure: return "IoError";
    }
    return "UnknownError";
}

}  // namespace polytunnel
