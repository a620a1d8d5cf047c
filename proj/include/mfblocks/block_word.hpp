#pragma once

#include <string>
#include <vector>

namespace mfblocks {

enum class EnsembleKind { hermitian, ginibre };

std::string kind_name(EnsembleKind k);
EnsembleKind kind_from_name(const std::string& name);

// One letter of a block word: a rectangular block S[p,q](u) or a symmetrized
// block T[p,q](u) (which requires p <= q), optionally adjointed.
struct BlockTerm {
    char symbol = 'S'; // 'S' or 'T'
    int p = 0;
    int q = 0;
    std::string label = "1";
    bool star = false;

    bool operator==(const BlockTerm&) const = default;
};

// Product of block letters together with the sector of the partial trace.
struct BlockWord {
    std::vector<BlockTerm> terms;
    int sector = 1;

    bool operator==(const BlockWord&) const = default;
};

// Canonical text form, e.g. "S[1,2](1)* S[2,1](1)"; parse(render(w)) == w.
std::string render_word(const BlockWord& w);

// Word reversed with every star flipped; moments of the two agree (they are
// complex conjugates, and all exact values here are real).
BlockWord reversed_adjoint(const BlockWord& w);

// Structural checks against a block count and ensemble kind: indices in
// 1..r, and T terms need p <= q. Throws std::invalid_argument.
void validate_word(const BlockWord& w, int r);

} // namespace mfblocks
