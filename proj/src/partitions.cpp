#include "plethy/partitions.hpp"

#include <sstream>

namespace plethy {

int Partition::length() const {
    int s = 0;
    for (int k : mult) s += k;
    return s;
}

int Partition::weight() const {
    int s = 0;
    for (int j = 1; j <= n; ++j) s += j * mult[j - 1];
    return s;
}

int Partition::max_part() const {
    for (int j = n; j >= 1; --j)
        if (mult[j - 1] > 0) return j;
    return 0;
}

std::string Partition::str() const {
    std::ostringstream out;
    out << "[";
    bool first = true;
    for (int j = 1; j <= n; ++j) {
        const int k = mult[j - 1];
        if (k == 0) continue;
        if (!first) out << " ";
        out << j;
        if (k > 1) out << "^" << k;
        first = false;
    }
    out << "]";
    return out.str();
}

int RectPartition::weight() const {
    int s = 0;
    for (const auto& [lh, k] : mult) s += lh.first * lh.second * k;
    return s;
}

int RectPartition::k(int l, int h) const {
    auto it = mult.find({l, h});
    return it == mult.end() ? 0 : it->second;
}

std::string RectPartition::str() const {
    std::ostringstream out;
    out << "[";
    bool first = true;
    for (const auto& [lh, k] : mult) {
        if (!first) out << " ";
        out << "(" << lh.first << "x" << lh.second << ")^" << k;
        first = false;
    }
    out << "]";
    return out.str();
}

std::vector<Partition> enum_partitions(int n) {
    if (n < 1) throw Error("enum_partitions: n must be >= 1");
    std::vector<Partition> out;
    std::vector<int> mult(n, 0);
    // Choose k_j ascending for j = 1..n; emission order is therefore
    // ascending lexicographic on the mult vector.
    auto rec = [&](auto&& self, int j, int remaining) -> void {
        if (j > n) {
            if (remaining == 0) out.push_back(Partition{n, mult});
            return;
        }
        for (int k = 0; k * j <= remaining; ++k) {
            mult[j - 1] = k;
            self(self, j + 1, remaining - k * j);
        }
        mult[j - 1] = 0;
    };
    rec(rec, 1, n);
    return out;
}

std::vector<RectPartition> enum_rect_partitions(int n) {
    if (n < 1) throw Error("enum_rect_partitions: n must be >= 1");
    // Rectangle sizes in the fixed global order.
    std::vector<std::pair<int, int>> rects;
    for (int l = 1; l <= n; ++l)
        for (int h = 1; h <= n; ++h)
            if (l * h <= n) rects.emplace_back(l, h);

    std::vector<RectPartition> out;
    std::map<std::pair<int, int>, int> mult;
    auto rec = [&](auto&& self, size_t i, int remaining) -> void {
        if (i == rects.size()) {
            if (remaining == 0) out.push_back(RectPartition{n, mult});
            return;
        }
        const auto [l, h] = rects[i];
        const int area = l * h;
        for (int k = 0; k * area <= remaining; ++k) {
            if (k > 0) mult[rects[i]] = k;
            self(self, i + 1, remaining - k * area);
        }
        mult.erase(rects[i]);
    };
    rec(rec, 0, n);
    return out;
}

Partition glue(const RectPartition& rp) {
    Partition m;
    m.n = rp.n;
    m.mult.assign(rp.n, 0);
    for (const auto& [lh, k] : rp.mult) m.mult[lh.first - 1] += lh.second * k;
    return m;
}

std::map<Partition, std::vector<RectPartition>> fibers_of_glue(int n) {
    std::map<Partition, std::vector<RectPartition>> fibers;
    for (const auto& rp : enum_rect_partitions(n)) fibers[glue(rp)].push_back(rp);
    return fibers;
}

} // namespace plethy
