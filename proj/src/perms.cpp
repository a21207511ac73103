#include "tetra/perms.hpp"

#include <algorithm>
#include <stdexcept>

namespace tetra {

namespace {

void check_index(int i) {
    if (i < 0 || i > 3)
        throw std::invalid_argument("index must lie in {0,1,2,3}");
}

}  // namespace

Partition22 Partition22::of_pair(int i, int j) {
    check_index(i);
    check_index(j);
    if (i == j)
        throw std::invalid_argument("Partition22: pair entries must differ");
    if (i == 0 || j == 0)
        return Partition22(i == 0 ? j : i);
    // 0 sits in the complement together with the remaining index
    return Partition22(6 - i - j);
}

const std::array<Partition22, 3>& Partition22::all() {
    static const std::array<Partition22, 3> values = {Partition22(1), Partition22(2), Partition22(3)};
    return values;
}

std::array<std::array<int, 2>, 2> Partition22::blocks() const {
    std::array<int, 2> first = {0, partner0_};
    std::array<int, 2> second{};
    int pos = 0;
    for (int v = 1; v <= 3; ++v)
        if (v != partner0_)
            second[static_cast<size_t>(pos++)] = v;
    return {first, second};
}

bool Partition22::contains_pair(int i, int j) const {
    check_index(i);
    check_index(j);
    const auto b = blocks();
    for (const auto& blk : b)
        if ((blk[0] == i && blk[1] == j) || (blk[0] == j && blk[1] == i))
            return true;
    return false;
}

std::string Partition22::str() const {
    const auto b = blocks();
    std::string s = "{";
    s += std::to_string(b[0][0]);
    s += std::to_string(b[0][1]);
    s += "|";
    s += std::to_string(b[1][0]);
    s += std::to_string(b[1][1]);
    s += "}";
    return s;
}

PermS4::PermS4() : im_{0, 1, 2, 3} {}

PermS4 PermS4::from_images(int i0, int i1, int i2, int i3) {
    std::array<bool, 4> seen{};
    for (int v : {i0, i1, i2, i3}) {
        check_index(v);
        if (seen[static_cast<size_t>(v)])
            throw std::invalid_argument("PermS4: images must be a bijection");
        seen[static_cast<size_t>(v)] = true;
    }
    PermS4 p;
    p.im_ = {static_cast<uint8_t>(i0), static_cast<uint8_t>(i1),
             static_cast<uint8_t>(i2), static_cast<uint8_t>(i3)};
    return p;
}

PermS4 PermS4::transposition(int a, int b) {
    check_index(a);
    check_index(b);
    if (a == b)
        throw std::invalid_argument("PermS4: transposition entries must differ");
    PermS4 p;
    std::swap(p.im_[static_cast<size_t>(a)], p.im_[static_cast<size_t>(b)]);
    return p;
}

PermS4 PermS4::then(const PermS4& g) const {
    PermS4 r;
    for (int i = 0; i < 4; ++i)
        r.im_[static_cast<size_t>(i)] = static_cast<uint8_t>(g((*this)(i)));
    return r;
}

PermS4 PermS4::inverse() const {
    PermS4 r;
    for (int i = 0; i < 4; ++i)
        r.im_[im_[static_cast<size_t>(i)]] = static_cast<uint8_t>(i);
    return r;
}

int PermS4::sign() const {
    // sign = (-1)^(n - #cycles)
    std::array<bool, 4> visited{};
    int cycles = 0;
    for (int i = 0; i < 4; ++i) {
        if (visited[static_cast<size_t>(i)])
            continue;
        ++cycles;
        int j = i;
        while (!visited[static_cast<size_t>(j)]) {
            visited[static_cast<size_t>(j)] = true;
            j = (*this)(j);
        }
    }
    return (4 - cycles) % 2 == 0 ? 1 : -1;
}

bool PermS4::is_identity() const {
    return im_ == std::array<uint8_t, 4>{0, 1, 2, 3};
}

bool PermS4::is_double_transposition() const {
    for (int i = 0; i < 4; ++i) {
        if ((*this)(i) == i)
            return false;
        if ((*this)((*this)(i)) != i)
            return false;
    }
    return true;
}

const std::vector<PermS4>& PermS4::all() {
    static const std::vector<PermS4> values = [] {
        std::vector<PermS4> v;
        std::array<int, 4> idx = {0, 1, 2, 3};
        do {
            v.push_back(from_images(idx[0], idx[1], idx[2], idx[3]));
        } while (std::next_permutation(idx.begin(), idx.end()));
        return v;
    }();
    return values;
}

const std::vector<PermS4>& PermS4::alternating() {
    static const std::vector<PermS4> values = [] {
        std::vector<PermS4> v;
        for (const PermS4& p : all())
            if (p.is_even())
                v.push_back(p);
        return v;
    }();
    return values;
}

const std::vector<PermS4>& PermS4::klein_prime() {
    static const std::vector<PermS4> values = [] {
        std::vector<PermS4> v;
        for (const PermS4& p : all())
            if (p.is_double_transposition())
                v.push_back(p);
        return v;
    }();
    return values;
}

PermS4 PermS4::zeta() {
    return from_images(1, 0, 3, 2);
}

PermS4 PermS4::theta() {
    return from_images(1, 2, 0, 3);
}

std::string PermS4::str() const {
    if (is_identity())
        return "e";
    std::string s;
    std::array<bool, 4> visited{};
    for (int i = 0; i < 4; ++i) {
        if (visited[static_cast<size_t>(i)] || (*this)(i) == i)
            continue;
        s += "(";
        int j = i;
        while (!visited[static_cast<size_t>(j)]) {
            visited[static_cast<size_t>(j)] = true;
            s += std::to_string(j);
            j = (*this)(j);
        }
        s += ")";
    }
    return s;
}

Parity parity(int i, int j, int k) {
    check_index(i);
    check_index(j);
    check_index(k);
    if (i == j || j == k || i == k)
        throw std::invalid_argument("parity: entries must be mutually distinct");
    const int l = 6 - i - j - k;
    return PermS4::from_images(i, j, k, l).is_even() ? Parity::Even : Parity::Odd;
}

Partition22 partition_of_pair(int i, int j) {
    return Partition22::of_pair(i, j);
}

Partition22 orbit_partition(const PermS4& eta) {
    if (!eta.is_double_transposition())
        throw std::invalid_argument("orbit_partition: permutation is not in N'");
    return Partition22::of_pair(0, eta(0));
}

}  // namespace tetra
