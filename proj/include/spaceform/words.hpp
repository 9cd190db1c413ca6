#pragma once

// Words over a finite generator alphabet, with free reduction, cyclic
// canonical forms, and a bounded rewriting search used to tag relations as
// consequences of earlier defining relators.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace spaceform {

// A letter is +(\,i+1) for generator i, -(i+1) for its inverse.
struct GroupWord {
    std::vector<int> letters;

    bool empty() const { return letters.empty(); }
    size_t size() const { return letters.size(); }

    static GroupWord gen(int i, int exp = 1) {
        GroupWord w;
        int l = (i + 1) * (exp >= 0 ? 1 : -1);
        int n = std::abs(exp);
        for (int k = 0; k < n; ++k) w.letters.push_back(l);
        return w;
    }

    GroupWord inverse() const {
        GroupWord w;
        w.letters.reserve(letters.size());
        for (auto it = letters.rbegin(); it != letters.rend(); ++it)
            w.letters.push_back(-*it);
        return w;
    }
};

inline GroupWord reduce(const GroupWord& w) {
    GroupWord r;
    for (int l : w.letters) {
        if (!r.letters.empty() && r.letters.back() == -l)
            r.letters.pop_back();
        else
            r.letters.push_back(l);
    }
    return r;
}

inline GroupWord concat(const GroupWord& a, const GroupWord& b) {
    GroupWord w = a;
    w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
    return reduce(w);
}

// Conjugation-invariant normal form: cyclically reduce, then take the
// lexicographically least rotation.
inline GroupWord cyclic_reduce(const GroupWord& w0) {
    GroupWord w = reduce(w0);
    while (w.letters.size() >= 2 && w.letters.front() == -w.letters.back()) {
        w.letters.erase(w.letters.begin());
        w.letters.pop_back();
    }
    return w;
}

inline GroupWord min_rotation(const GroupWord& w) {
    if (w.letters.empty()) return w;
    GroupWord best = w;
    GroupWord rot = w;
    for (size_t i = 1; i < w.letters.size(); ++i) {
        std::rotate(rot.letters.begin(), rot.letters.begin() + 1, rot.letters.end());
        if (rot.letters < best.letters) best = rot;
    }
    return best;
}

inline GroupWord cyclic_canonical(const GroupWord& w) {
    return min_rotation(cyclic_reduce(w));
}

// Equality as cyclic words, optionally up to inversion.
inline bool cyclically_equal(const GroupWord& a, const GroupWord& b, bool up_to_inverse) {
    GroupWord ca = cyclic_canonical(a), cb = cyclic_canonical(b);
    if (ca.letters == cb.letters) return true;
    if (!up_to_inverse) return false;
    return cyclic_canonical(a.inverse()).letters == cb.letters;
}

inline std::vector<long long> exponent_sums(const GroupWord& w, int ngens) {
    std::vector<long long> e(ngens, 0);
    for (int l : w.letters) {
        int g = std::abs(l) - 1;
        if (g >= ngens) throw std::out_of_range("exponent_sums: generator out of range");
        e[g] += l > 0 ? 1 : -1;
    }
    return e;
}

inline std::string word_to_string(const GroupWord& w, const std::vector<std::string>& names) {
    if (w.letters.empty()) return "1";
    std::string s;
    size_t i = 0;
    while (i < w.letters.size()) {
        int l = w.letters[i];
        size_t j = i;
        while (j < w.letters.size() && w.letters[j] == l) ++j;
        int exp = static_cast<int>(j - i) * (l > 0 ? 1 : -1);
        s += names.at(std::abs(l) - 1);
        if (exp != 1) s += "^" + std::to_string(exp);
        i = j;
    }
    return s;
}

// Bounded rewriting: decide whether `w` reduces to the empty word using the
// given relators. Moves replace a matched block of at least half of a cyclic
// rotation of a relator (or its inverse) by the inverted complement; bounded
// depth and bounded growth keep the search finite. Failure to reduce proves
// nothing, which is exactly the contract the relation classifier wants.
class RewriteSystem {
  public:
    explicit RewriteSystem(std::vector<GroupWord> relators) {
        for (const auto& r : relators) {
            GroupWord c = cyclic_reduce(r);
            if (c.letters.empty()) continue;
            add_rotations(c);
            add_rotations(c.inverse());
        }
    }

    bool reduces_to_identity(const GroupWord& w0, int max_depth = 20,
                             int growth_slack = 8) const {
        GroupWord start = cyclic_reduce(w0);
        if (start.letters.empty()) return true;
        if (rotations_.empty()) return false;
        size_t cap = start.letters.size() + static_cast<size_t>(growth_slack);
        std::set<std::vector<int>> seen;
        return dfs(start, 0, max_depth, cap, seen);
    }

  private:
    std::vector<std::vector<int>> rotations_;

    void add_rotations(const GroupWord& r) {
        GroupWord rot = r;
        for (size_t i = 0; i < r.letters.size(); ++i) {
            rotations_.push_back(rot.letters);
            std::rotate(rot.letters.begin(), rot.letters.begin() + 1, rot.letters.end());
        }
    }

    bool dfs(const GroupWord& w, int depth, int max_depth, size_t cap,
             std::set<std::vector<int>>& seen) const {
        if (w.letters.empty()) return true;
        if (depth >= max_depth) return false;
        if (seen.size() > 200000) return false;
        if (!seen.insert(cyclic_canonical(w).letters).second) return false;

        // collect candidate moves, shortest results first
        std::vector<GroupWord> nexts;
        for (const auto& rot : rotations_) {
            size_t rl = rot.size();
            size_t min_match = (rl + 1) / 2;
            for (size_t match = rl; match >= min_match; --match) {
                // find `rot` prefix of length `match` inside w
                if (match > w.letters.size()) continue;
                for (size_t pos = 0; pos + match <= w.letters.size(); ++pos) {
                    bool ok = true;
                    for (size_t k = 0; k < match; ++k)
                        if (w.letters[pos + k] != rot[k]) {
                            ok = false;
                            break;
                        }
                    if (!ok) continue;
                    // replace the matched block by the inverse of the rest
                    GroupWord next;
                    next.letters.assign(w.letters.begin(),
                                        w.letters.begin() + static_cast<long>(pos));
                    for (size_t k = rl; k-- > match;)
                        next.letters.push_back(-rot[k]);
                    next.letters.insert(next.letters.end(),
                                        w.letters.begin() + static_cast<long>(pos + match),
                                        w.letters.end());
                    next = reduce(next);
                    if (next.letters.size() <= cap) nexts.push_back(next);
                }
                if (match == 0) break;
            }
        }
        std::sort(nexts.begin(), nexts.end(), [](const GroupWord& a, const GroupWord& b) {
            return a.letters.size() < b.letters.size();
        });
        for (const auto& n : nexts)
            if (dfs(n, depth + 1, max_depth, cap, seen)) return true;
        return false;
    }
};

} // namespace spaceform
