#pragma once

// Schläfli symbols: linear diagrams (p,q) and (p,q,r), plus explicit branch
// matrices for non-linear diagrams. Branch angles are kept as exact rational
// multiples of pi so every module evaluates the same cosine once.

#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace spaceform {

struct PiFraction {
    long num = 1;
    long den = 2; // angle = pi * num / den

    void normalize() {
        if (den == 0) throw std::invalid_argument("PiFraction: zero denominator");
        if (den < 0) {
            den = -den;
            num = -num;
        }
        long g = std::gcd(std::abs(num), den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }
};

struct SchlafliSymbol {
    std::vector<int> entries; // length 2 (plane) or 3 (space); each >= 2

    // Optional explicit branch angles beta^{ij} for non-linear diagrams,
    // keyed by (i, j) with i < j. Missing pairs default to pi/2.
    int explicit_order = 0; // 3 or 4 when branches are given
    std::map<std::pair<int, int>, PiFraction> branches;

    bool has_branches() const { return explicit_order > 0; }

    int order() const { return has_branches() ? explicit_order : static_cast<int>(entries.size()) + 1; }

    static SchlafliSymbol linear(std::vector<int> ent) {
        if (ent.size() != 2 && ent.size() != 3)
            throw std::invalid_argument("Schläfli symbol needs 2 or 3 entries");
        for (int e : ent)
            if (e < 2) throw std::invalid_argument("Schläfli entries must be >= 2");
        SchlafliSymbol s;
        s.entries = std::move(ent);
        return s;
    }

    static SchlafliSymbol with_branches(int order,
                                        std::map<std::pair<int, int>, PiFraction> b) {
        if (order != 3 && order != 4)
            throw std::invalid_argument("branch diagrams of rank 3 or 4 only");
        SchlafliSymbol s;
        s.explicit_order = order;
        for (auto& [ij, f] : b) {
            auto [i, j] = ij;
            if (i < 0 || j < 0 || i >= order || j >= order || i == j)
                throw std::invalid_argument("branch index out of range");
            PiFraction fr = f;
            fr.normalize();
            if (fr.num <= 0 || 2 * fr.num > fr.den)
                throw std::invalid_argument("branch angles must lie in (0, pi/2]");
            std::pair<int, int> key{std::min(i, j), std::max(i, j)};
            auto [it, inserted] = s.branches.emplace(key, fr);
            if (!inserted && (it->second.num != fr.num || it->second.den != fr.den))
                throw std::invalid_argument("asymmetric explicit branch matrix");
        }
        return s;
    }

    std::string str() const {
        std::ostringstream os;
        if (has_branches()) {
            os << "branches(order " << explicit_order << ")";
            return os.str();
        }
        for (size_t i = 0; i < entries.size(); ++i) {
            if (i) os << ",";
            os << entries[i];
        }
        return os.str();
    }
};

// Parses "p,q" or "p,q,r".
inline SchlafliSymbol parse_symbol(const std::string& text) {
    std::vector<int> ent;
    std::string tok;
    std::istringstream is(text);
    while (std::getline(is, tok, ',')) {
        size_t pos = 0;
        int v;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("cannot parse Schläfli entry '" + tok + "'");
        }
        while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
        if (pos != tok.size())
            throw std::invalid_argument("cannot parse Schläfli entry '" + tok + "'");
        ent.push_back(v);
    }
    return SchlafliSymbol::linear(std::move(ent));
}

// The tetragonal sphenoid: branch diagram with a 4-cycle of pi/3 angles and
// orthogonal diagonals beta^{02} = beta^{13} = pi/2.
inline SchlafliSymbol sphenoid_symbol() {
    std::map<std::pair<int, int>, PiFraction> b;
    b[{0, 1}] = {1, 3};
    b[{1, 2}] = {1, 3};
    b[{2, 3}] = {1, 3};
    b[{0, 3}] = {1, 3};
    b[{0, 2}] = {1, 2};
    b[{1, 3}] = {1, 2};
    return SchlafliSymbol::with_branches(4, std::move(b));
}

} // namespace spaceform
