#pragma once

#include <optional>
#include <string_view>

#include "bisieve/modular.hpp"

namespace bisieve {

enum class TopologyKind { Hypercube, Crossbar, Omega };

std::string_view topology_name(TopologyKind kind);

struct TopologyReport {
    TopologyKind kind;
    Natural p;  // processors / nodes
    std::optional<Natural> dimension;
    Natural bisection_width;
    Natural switch_count;
    std::optional<Natural> wires_per_switch;
    std::optional<Natural> crossbar_units;  // omega only: 2x2 crossbar building blocks
};

/// d-dimensional hypercube: p = 2^d nodes, one switch per node, each switch
/// wired to its processor and d neighbours. 1 <= d <= 62.
TopologyReport hypercube_metrics(Natural d);

/// Omega network over p = 2^m inputs: (1/2) p log2 p two-by-two crossbars,
/// i.e. 2 p log2 p switches in total. p must be a power of two >= 2.
TopologyReport omega_metrics(Natural p);

/// Full p x p crossbar: p^2 switches. Bisection width is taken as p since
/// every input can reach a distinct output simultaneously.
TopologyReport crossbar_metrics(Natural p);

}  // namespace bisieve
