#include "vtx/partition.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace vtx {

namespace {

void check_parts(const std::vector<int>& parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw std::invalid_argument("partition: parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("partition: parts must be weakly decreasing");
    }
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    check_parts(parts_);
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition Partition::parse(const std::string& text) {
    std::size_t a = text.find_first_not_of(" \t");
    std::size_t b = text.find_last_not_of(" \t");
    if (a == std::string::npos || text[a] != '[' || text[b] != ']')
        throw std::invalid_argument("partition: expected bracketed form like [3,1,1]");
    std::string inner = text.substr(a + 1, b - a - 1);
    std::vector<int> parts;
    std::stringstream ss(inner);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t pos = 0;
        long v = 0;
        try {
            v = std::stol(tok, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("partition: bad part '" + tok + "'");
        }
        while (pos < tok.size() && (tok[pos] == ' ' || tok[pos] == '\t')) ++pos;
        if (pos != tok.size()) throw std::invalid_argument("partition: bad part '" + tok + "'");
        if (v <= 0 || v > 1000000) throw std::invalid_argument("partition: part out of range");
        parts.push_back(static_cast<int>(v));
    }
    if (!inner.empty() && parts.empty())
        throw std::invalid_argument("partition: malformed list");
    return Partition(std::move(parts));
}

std::string Partition::str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    out += ']';
    return out;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> cols(static_cast<std::size_t>(parts_[0]), 0);
    for (int row : parts_)
        for (int j = 0; j < row; ++j) ++cols[static_cast<std::size_t>(j)];
    return Partition(std::move(cols));
}

Partition Partition::doubled() const {
    std::vector<int> out = parts_;
    for (int& p : out) p *= 2;
    return Partition(std::move(out));
}

long long Partition::kappa() const {
    long long k = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        long long mu = parts_[i];
        k += mu * (mu - 2 * static_cast<long long>(i + 1) + 1);
    }
    return k;
}

long long Partition::z_factor() const {
    long long z = 1;
    std::size_t i = 0;
    while (i < parts_.size()) {
        std::size_t j = i;
        while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
        long long m = static_cast<long long>(j - i);
        for (long long t = 1; t <= m; ++t) z *= t * 1LL;
        for (long long t = 0; t < m; ++t) z *= parts_[i];
        i = j;
    }
    return z;
}

long long Partition::aut_factor() const {
    long long z = 1;
    std::size_t i = 0;
    while (i < parts_.size()) {
        std::size_t j = i;
        while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
        for (long long t = 1; t <= static_cast<long long>(j - i); ++t) z *= t;
        i = j;
    }
    return z;
}

bool Partition::contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (int i = 0; i < inner.length(); ++i)
        if (inner.part(i) > part(i)) return false;
    return true;
}

std::vector<int> Partition::hook_lengths() const {
    Partition conj = conjugate();
    std::vector<int> hooks;
    hooks.reserve(static_cast<std::size_t>(size_));
    for (int i = 0; i < length(); ++i)
        for (int j = 0; j < part(i); ++j)
            hooks.push_back(part(i) - j + conj.part(j) - i - 1);
    return hooks;
}

long long Partition::n_stat() const {
    long long n = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i)
        n += static_cast<long long>(i) * parts_[i];
    return n;
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& stack,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(stack);
        return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
        stack.push_back(k);
        gen_partitions(remaining - k, k, stack, out);
        stack.pop_back();
    }
}

// Emits the current prefix, then extends it by one more row; every
// subdiagram is reached exactly once.
void gen_subdiagrams(const Partition& outer, int row, int prev, std::vector<int>& stack,
                     std::vector<Partition>& out) {
    out.emplace_back(stack);
    if (row >= outer.length()) return;
    int cap = std::min(prev, outer.part(row));
    for (int v = cap; v >= 1; --v) {
        stack.push_back(v);
        gen_subdiagrams(outer, row + 1, v, stack, out);
        stack.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int d) {
    if (d < 0) throw std::invalid_argument("partitions_of: negative size");
    std::vector<Partition> out;
    std::vector<int> stack;
    gen_partitions(d, d == 0 ? 1 : d, stack, out);
    return out;
}

std::vector<Partition> subdiagrams(const Partition& outer) {
    std::vector<Partition> out;
    std::vector<int> stack;
    gen_subdiagrams(outer, 0, outer.empty() ? 0 : outer.part(0), stack, out);
    return out;
}

int total_size(const PartitionTriple& t) { return t[0].size() + t[1].size() + t[2].size(); }

int total_length(const PartitionTriple& t) {
    return t[0].length() + t[1].length() + t[2].length();
}

long long aut_order(const PartitionTriple& t) {
    return t[0].aut_factor() * t[1].aut_factor() * t[2].aut_factor();
}

std::string triple_str(const PartitionTriple& t) {
    return "(" + t[0].str() + "," + t[1].str() + "," + t[2].str() + ")";
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.str(); }

}  // namespace vtx
