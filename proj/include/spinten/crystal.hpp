#pragma once

#include <optional>
#include <vector>

#include "spinten/partition.hpp"

namespace spinten {

struct not_p_regular : std::domain_error {
    using std::domain_error::domain_error;
};

struct Node {
    int row = 0;
    int col = 0;
    int residue = 0;  // (col - row) mod p

    bool operator==(const Node& o) const {
        return row == o.row && col == o.col;
    }
};

/// i-signature of a partition: addable/removable i-nodes top to bottom,
/// reduced by cancelling Addable-immediately-above-Removable pairs.
struct SignatureData {
    int i = 0;
    int p = 2;
    // Full node word, top to bottom. tag true = removable, false = addable.
    std::vector<std::pair<Node, bool>> word;
    std::vector<Node> normal;    // removables surviving reduction, top to bottom
    std::vector<Node> conormal;  // addables surviving reduction, top to bottom
    int eps = 0;                 // = normal.size()
    int phi = 0;                 // = conormal.size()
    std::optional<Node> good;    // lowest normal node
    std::optional<Node> cogood;  // highest conormal node
};

SignatureData signature(const Partition& lambda, int i, int p = 2);

int eps(const Partition& lambda, int i, int p = 2);
int phi(const Partition& lambda, int i, int p = 2);

/// Removes (adds) the good (cogood) i-node r times, recomputing the
/// signature each step. Empty optional when r exceeds eps_i (phi_i).
std::optional<Partition> e_tilde(const Partition& lambda, int i, int r, int p = 2);
std::optional<Partition> f_tilde(const Partition& lambda, int i, int r, int p = 2);

/// True iff lambda has exactly one normal node across all residues.
bool is_JS(const Partition& lambda, int p = 2);

/// All addable / removable nodes regardless of residue, top to bottom.
std::vector<Node> addable_nodes(const Partition& lambda, int p = 2);
std::vector<Node> removable_nodes(const Partition& lambda, int p = 2);

/// Partition with node A removed (A must be removable).
Partition remove_node(const Partition& lambda, const Node& a);

}  // namespace spinten
