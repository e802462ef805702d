#pragma once

#include <set>
#include <stdexcept>
#include <string>

namespace wdx::wd {

/**
 * A subset of S_d = {1,...,d-1}, the simple-root indices numbered down the
 * superdiagonal.
 */
struct SubsetI {
    int d = 1;
    std::set<int> members;

    SubsetI() = default;
    SubsetI(int d_, std::set<int> m) : d(d_), members(std::move(m)) {
        if (d < 1) throw std::invalid_argument("d must be >= 1");
        for (int x : members)
            if (x < 1 || x > d - 1) throw std::invalid_argument("subset member out of {1,...,d-1}");
    }

    std::set<int> complement() const {
        std::set<int> c;
        for (int x = 1; x <= d - 1; ++x)
            if (!members.count(x)) c.insert(x);
        return c;
    }

    /** Image under x -> d-x (the -w_0 involution on simple roots). */
    SubsetI bar() const {
        std::set<int> b;
        for (int x : members) b.insert(d - x);
        return SubsetI(d, std::move(b));
    }

    bool operator==(const SubsetI&) const = default;

    std::string str() const {
        std::string s = "{";
        for (int x : members) s += (s.size() > 1 ? "," : "") + std::to_string(x);
        return s + "}";
    }
};

inline void check_same_d(const SubsetI& a, const SubsetI& b) {
    if (a.d != b.d) throw std::invalid_argument("subsets live in different S_d");
}

inline SubsetI sym_diff(const SubsetI& a, const SubsetI& b) {
    check_same_d(a, b);
    std::set<int> s;
    for (int x : a.members)
        if (!b.members.count(x)) s.insert(x);
    for (int x : b.members)
        if (!a.members.count(x)) s.insert(x);
    return SubsetI(a.d, std::move(s));
}

inline int delta(const SubsetI& a, const SubsetI& b) { return (int)sym_diff(a, b).members.size(); }

}  // namespace wdx::wd
