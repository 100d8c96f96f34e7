#include "bisieve/topology.hpp"

#include <bit>
#include <limits>
#include <string>

#include "bisieve/error.hpp"

namespace bisieve {

std::string_view topology_name(TopologyKind kind) {
    switch (kind) {
        case TopologyKind::Hypercube:
            return "hypercube";
        case TopologyKind::Crossbar:
            return "crossbar";
        case TopologyKind::Omega:
            return "omega";
    }
    return "unknown";
}

TopologyReport hypercube_metrics(Natural d) {
    if (d == 0) {
        throw DomainError("hypercube dimension must be >= 1");
    }
    if (d > 62) {
        throw DomainError("hypercube dimension must be <= 62");
    }
    const Natural p = Natural{1} << d;
    return TopologyReport{
        .kind = TopologyKind::Hypercube,
        .p = p,
        .dimension = d,
        .bisection_width = p / 2,
        .switch_count = p,
        .wires_per_switch = 1 + d,
        .crossbar_units = std::nullopt,
    };
}

TopologyReport omega_metrics(Natural p) {
    if (p < 2 || !std::has_single_bit(p)) {
        throw DomainError("omega network size must be a power of two >= 2, got " + std::to_string(p));
    }
    const auto stages = static_cast<Natural>(std::countr_zero(p));
    if (p > std::numeric_limits<Natural>::max() / (2 * stages)) {
        throw DomainError("omega network too large");
    }
    return TopologyReport{
        .kind = TopologyKind::Omega,
        .p = p,
        .dimension = stages,
        .bisection_width = p / 2,
        .switch_count = 2 * p * stages,
        .wires_per_switch = std::nullopt,
        .crossbar_units = p / 2 * stages,
    };
}

TopologyReport crossbar_metrics(Natural p) {
    if (p == 0) {
        throw DomainError("crossbar needs p >= 1");
    }
    if (p > 0xffffffffULL) {
        throw DomainError("crossbar too large");
    }
    return TopologyReport{
        .kind = TopologyKind::Crossbar,
        .p = p,
        .dimension = std::nullopt,
        .bisection_width = p,
        .switch_count = p * p,
        .wires_per_switch = std::nullopt,
        .crossbar_units = std::nullopt,
    };
}

}  // namespace bisieve
