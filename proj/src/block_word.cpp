#include "mfblocks/block_word.hpp"

#include <sstream>
#include <stdexcept>

namespace mfblocks {

std::string kind_name(EnsembleKind k) { return k == EnsembleKind::hermitian ? "hermitian" : "ginibre"; }

EnsembleKind kind_from_name(const std::string& name) {
    if (name == "hermitian") return EnsembleKind::hermitian;
    if (name == "ginibre") return EnsembleKind::ginibre;
    throw std::invalid_argument("unknown ensemble kind '" + name + "' (expected hermitian or ginibre)");
}

std::string render_word(const BlockWord& w) {
    std::ostringstream os;
    for (size_t i = 0; i < w.terms.size(); ++i) {
        const auto& t = w.terms[i];
        if (i) os << " ";
        os << t.symbol << "[" << t.p << "," << t.q << "](" << t.label << ")";
        if (t.star) os << "*";
    }
    return os.str();
}

BlockWord reversed_adjoint(const BlockWord& w) {
    BlockWord out;
    out.sector = w.sector;
    out.terms.reserve(w.terms.size());
    for (auto it = w.terms.rbegin(); it != w.terms.rend(); ++it) {
        BlockTerm t = *it;
        t.star = !t.star;
        out.terms.push_back(t);
    }
    return out;
}

void validate_word(const BlockWord& w, int r) {
    if (w.sector < 1 || w.sector > r)
        throw std::invalid_argument("block word: sector " + std::to_string(w.sector) + " outside 1.." +
                                    std::to_string(r));
    for (const auto& t : w.terms) {
        if (t.symbol != 'S' && t.symbol != 'T')
            throw std::invalid_argument("block word: unknown symbol");
        if (t.p < 1 || t.q < 1 || t.p > r || t.q > r)
            throw std::invalid_argument("block word: index [" + std::to_string(t.p) + "," + std::to_string(t.q) +
                                        "] outside 1.." + std::to_string(r));
        if (t.symbol == 'T' && t.p > t.q)
            throw std::invalid_argument("block word: T[" + std::to_string(t.p) + "," + std::to_string(t.q) +
                                        "] needs p <= q");
    }
}

} // namespace mfblocks
