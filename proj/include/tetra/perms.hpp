#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace tetra {

enum class Parity { Even, Odd };

// One of the three partitions of {0,1,2,3} into two pairs, identified by the
// partner of 0.
class Partition22 {
public:
    static Partition22 of_pair(int i, int j);              // the partition with block {i,j}
    static const std::array<Partition22, 3>& all();

    int partner_of_zero() const { return partner0_; }
    // the two blocks, each sorted, block containing 0 first
    std::array<std::array<int, 2>, 2> blocks() const;
    bool contains_pair(int i, int j) const;

    friend bool operator==(Partition22 a, Partition22 b) { return a.partner0_ == b.partner0_; }
    friend bool operator!=(Partition22 a, Partition22 b) { return !(a == b); }
    friend bool operator<(Partition22 a, Partition22 b) { return a.partner0_ < b.partner0_; }

    std::string str() const;  // "{01|23}"

private:
    explicit Partition22(int partner0) : partner0_(partner0) {}
    int partner0_;
};

// A permutation of {0,1,2,3}.
class PermS4 {
public:
    PermS4();  // identity
    static PermS4 from_images(int i0, int i1, int i2, int i3);
    static PermS4 transposition(int a, int b);

    int operator()(int i) const { return im_[static_cast<size_t>(i)]; }

    // Product "this then g": (this.then(g))(i) = g(this(i)). Composition in
    // the opposite order is g.then(*this).
    PermS4 then(const PermS4& g) const;
    PermS4 inverse() const;

    int sign() const;  // +1 or -1, via cycle decomposition
    bool is_even() const { return sign() == 1; }
    bool is_identity() const;
    bool is_double_transposition() const;

    static const std::vector<PermS4>& all();          // S4, 24 elements
    static const std::vector<PermS4>& alternating();  // A4, 12 elements
    static const std::vector<PermS4>& klein_prime();  // N' = the 3 double transpositions
    static PermS4 zeta();   // (01)(23)
    static PermS4 theta();  // (012)

    friend bool operator==(const PermS4& a, const PermS4& b) { return a.im_ == b.im_; }
    friend bool operator!=(const PermS4& a, const PermS4& b) { return !(a == b); }
    friend bool operator<(const PermS4& a, const PermS4& b) { return a.im_ < b.im_; }

    std::string str() const;  // cycle notation, "e" for the identity

private:
    std::array<uint8_t, 4> im_;
};

// Parity of a sequence (i,j,k) of mutually distinct elements of {0,1,2,3}:
// even iff the unique permutation sending (0,1,2) -> (i,j,k) is in A4.
Parity parity(int i, int j, int k);

// The partition with block {i,j}; rejects i = j.
Partition22 partition_of_pair(int i, int j);

// The orbit partition of a double transposition; rejects other permutations.
Partition22 orbit_partition(const PermS4& eta);

}  // namespace tetra
