#ifndef QTCAT_PARTITIONS_HPP
#define QTCAT_PARTITIONS_HPP

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace qtcat {

// A partition is stored weakly increasing: (nu_1 <= nu_2 <= ... ), all parts >= 1.
// The empty partition has weight 0 and length 0.
using Partition = std::vector<uint32_t>;

uint64_t partition_weight(const Partition &nu);
bool is_valid_partition(const Partition &nu);

// p(k): number of partitions of k. p(0) = 1; negative inputs are rejected
// by the unsigned signature.
mpz_class count_partitions(uint64_t k);

// p(b,k): partitions of k into at most b parts. p(0,k) = 0 for k > 0,
// p(b,0) = 1 for all b >= 0.
mpz_class count_partitions_bounded(uint64_t b, uint64_t k);

// Pi_{b,k}, listed descending in the graded term order (head = maximal
// monomial index, i.e. the partition (k) when b >= 1).
std::vector<Partition> enumerate_partitions_bounded(uint32_t b, uint32_t k);

// Substring decomposition of a nonempty partition: runs of 1's chopped into
// triples plus one run of length 1..3, then the parts >= 2 chopped into
// pairs plus a final pair or singleton.
struct SubstringDecomposition {
    std::vector<Partition> blocks;
    Partition source;
    uint32_t ones_count = 0; // number of 1's
    uint32_t m = 0;          // number of parts >= 2
};

SubstringDecomposition substring_decompose(const Partition &nu);

} // namespace qtcat

#endif
