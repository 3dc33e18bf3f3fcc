#pragma once

#include <string>
#include <vector>

#include "sepdim/errors.hpp"

namespace sepdim {

/*
 * Party dimensions (d_1,...,d_n) of a multipartite system together with the
 * composite dimension d = d_1*...*d_n. Composite indices are row-major:
 * party 1 is the most significant digit, matching the Kronecker product
 * convention used throughout.
 */
class SystemShape {
public:
    SystemShape() = default;
    explicit SystemShape(std::vector<int> dims);

    int parties() const { return static_cast<int>(dims_.size()); }
    int dim(int party) const { return dims_.at(static_cast<size_t>(party)); }
    const std::vector<int>& dims() const { return dims_; }
    int total() const { return total_; }

    /// Composite index of a multi-index (one digit per party).
    int encode(const std::vector<int>& multi) const;
    /// Multi-index digits of a composite index.
    std::vector<int> decode(int index) const;
    void decode_into(int index, int* out) const;

    /// Shape with every party dimension doubled (qubit ancilla per party).
    SystemShape doubled() const;

    /// "2x3x2" style label used in reports and file names.
    std::string label() const;
    static SystemShape parse(const std::string& text);

    friend bool operator==(const SystemShape& a, const SystemShape& b) {
        return a.dims_ == b.dims_;
    }
    friend bool operator!=(const SystemShape& a, const SystemShape& b) { return !(a == b); }

private:
    std::vector<int> dims_;
    int total_ = 0;
};

/// Subset S of parties, one bit per party; selects which factors Gamma_S transposes.
struct SubsetMask {
    unsigned bits = 0;

    SubsetMask() = default;
    explicit SubsetMask(unsigned b) : bits(b) {}

    bool contains(int party) const { return (bits >> party) & 1u; }
    bool empty() const { return bits == 0; }
    SubsetMask sym_diff(SubsetMask other) const { return SubsetMask(bits ^ other.bits); }
    static SubsetMask single(int party) { return SubsetMask(1u << party); }

    /// All 2^n subsets, the group G as mask values.
    static std::vector<SubsetMask> all(int parties);

    friend bool operator==(SubsetMask a, SubsetMask b) { return a.bits == b.bits; }
};

} // namespace sepdim
