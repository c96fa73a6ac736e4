#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "plethy/errors.hpp"

namespace plethy {

// Partition of n in power notation [1^{k_1} ... n^{k_n}]:
// mult[j-1] = k_j, sum of j*k_j over j equals n.
struct Partition {
    int n = 0;
    std::vector<int> mult; // size n

    int length() const; // sum of k_j
    int weight() const; // sum of j*k_j, must equal n
    int max_part() const; // largest j with k_j > 0, 0 for the empty partition
    int k(int j) const { return mult.at(j - 1); }

    // e.g. "[1^2 4]" for 6 = 4+1+1
    std::string str() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend bool operator<(const Partition& a, const Partition& b) {
        if (a.n != b.n) return a.n < b.n;
        return a.mult < b.mult;
    }
};

// Rectangular partition of n: multiplicities k_{l,h} >= 0 with
// n = sum l*h*k_{l,h}; rectangles l x h and h x l are distinct.
// Only nonzero entries are stored.
struct RectPartition {
    int n = 0;
    std::map<std::pair<int, int>, int> mult; // (l,h) -> k_{l,h} > 0

    int weight() const; // sum of l*h*k_{l,h}, must equal n
    int k(int l, int h) const;

    // e.g. "[(1x2)^1 (2x1)^1]"
    std::string str() const;

    friend bool operator==(const RectPartition&, const RectPartition&) = default;
    friend bool operator<(const RectPartition& a, const RectPartition& b) {
        if (a.n != b.n) return a.n < b.n;
        return a.mult < b.mult;
    }
};

// All partitions of n, in ascending lexicographic order on the mult
// vector (k_1, ..., k_n).
std::vector<Partition> enum_partitions(int n);

// All rectangular partitions of n, enumerated by recursive descent over
// rectangle sizes in the fixed order (l ascending, then h ascending).
std::vector<RectPartition> enum_rect_partitions(int n);

// The gluing map pi: [[k]] -> [m] with m_l = sum_h h*k_{l,h}.
Partition glue(const RectPartition& rp);

// enum_rect_partitions(n) grouped by glue image; keys iterate in the
// enum_partitions order and the fibers cover RP_n exactly.
std::map<Partition, std::vector<RectPartition>> fibers_of_glue(int n);

} // namespace plethy
