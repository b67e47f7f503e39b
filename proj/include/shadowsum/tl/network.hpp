#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "shadowsum/arith/fraction.hpp"
#include "shadowsum/tl/diagram.hpp"

namespace shadowsum::tl {

using arith::Complex;
using arith::Fraction;
using arith::RootContext;

struct Budget {
    int max_crossings = 24;
    int max_strands = 14;
};

// Local states of a node: each term pairs up the node's ports.
struct NodeTerms {
    std::vector<std::vector<std::uint8_t>> pairings;
    std::vector<Fraction> coeffs;
};

struct NetworkNode {
    int degree = 0;
    std::shared_ptr<const NodeTerms> terms;
};

// Strand-level network after cabling: elementary crossings and projectors
// joined by wires between ports.
struct Network {
    std::vector<NetworkNode> nodes;
    std::vector<int> port_offset;  // first global port of each node
    std::vector<int> wire;         // global port -> global port it is wired to
    int free_loops = 0;
    int elementary_crossings = 0;
    int largest_projector = 0;

    int port_count() const { return static_cast<int>(wire.size()); }
    int node_of_port(int p) const;
};

struct NetworkOptions {
    Budget budget;
    // Swaps the roles of A and A^-1 in the crossing expansion.
    bool mirror = false;
};

// Replaces every colour-c strand by c parallel strands with one projector per
// chain and every vertex by its banded connection. Framing offsets are not
// included; see framing_factor.
Network cable(const FramedGraphDiagram &d, const NetworkOptions &opts);

// Contracts the network by dynamic programming over a frontier of open wires.
Fraction contract_exact(const Network &net);
Complex contract_numeric(const Network &net, const RootContext &ctx);

} // namespace shadowsum::tl
