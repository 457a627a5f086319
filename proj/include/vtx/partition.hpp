#pragma once

#include <array>
#include <compare>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace vtx {

// Integer partition: weakly decreasing sequence of positive parts.
// The empty partition is a valid value and the default.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    // Text form "[3,1,1]"; "[]" is the empty partition.
    static Partition parse(const std::string& text);
    std::string str() const;

    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    // 0-based row access, 0 beyond the last row.
    int part(int i) const {
        return (i >= 0 && i < length()) ? parts_[static_cast<std::size_t>(i)] : 0;
    }
    const std::vector<int>& parts() const { return parts_; }

    Partition conjugate() const;
    Partition doubled() const;   // (2*mu_1, 2*mu_2, ...)

    // kappa = sum mu_i (mu_i - 2i + 1); even, and kappa(mu^t) = -kappa(mu).
    long long kappa() const;

    // Centralizer order of a permutation of this cycle type: prod i^{m_i} m_i!.
    long long z_factor() const;

    // prod_i m_i! over part multiplicities.
    long long aut_factor() const;

    // Young-diagram inclusion: inner fits inside *this row by row.
    bool contains(const Partition& inner) const;

    // Hook lengths of all cells, row-major.
    std::vector<int> hook_lengths() const;

    // n(mu) = sum (i-1) mu_i with 1-based i.
    long long n_stat() const;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// All partitions of d in reverse-lexicographic order: (d), (d-1,1), ..., (1^d).
std::vector<Partition> partitions_of(int d);

// All partitions contained in outer (including the empty one), no fixed order
// promised beyond determinism.
std::vector<Partition> subdiagrams(const Partition& outer);

using PartitionTriple = std::array<Partition, 3>;

int total_size(const PartitionTriple& t);
int total_length(const PartitionTriple& t);
long long aut_order(const PartitionTriple& t);
std::string triple_str(const PartitionTriple& t);

std::ostream& operator<<(std::ostream& os, const Partition& p);

}  // namespace vtx
