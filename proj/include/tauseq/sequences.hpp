#pragma once

#include "tauseq/reduction.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tauseq {

/// One term of a signed τ-exceptional sequence, living over `level`.
struct SequenceEntry {
    SignedObject object;
    const Level* level;
    std::string name;
};
using Sequence = std::vector<SequenceEntry>;

/// Ordered support τ-rigid object (t_1, ..., t_k) to its signed τ-exceptional sequence.
Sequence psi(const Level& root, const std::vector<SignedObject>& t);
/// Inverse of psi. Entry i must live over the level reached by reducing by entries i+1, ..., k.
std::vector<SignedObject> phi(const Level& root, const std::vector<SignedObject>& seq);

/// Resolves names right to left, each over the reduction by the names after it.
/// Throws DomainError if an entry is not τ-rigid over its level.
Sequence parse_sequence(const Level& root, const std::vector<std::string>& names);
bool is_signed_exceptional(const Level& root, const std::vector<SignedObject>& seq);

struct Validation {
    bool ok = true;
    std::string diagnosis;  // first failed condition
};
/// Checks a named sequence against the recursive definition on freshly built
/// levels, without using the reduction maps.
Validation validate_sequence(const AlgebraPtr& a, const std::vector<NamedModule>& catalog,
                             const std::vector<std::string>& names);

std::vector<SignedObject> objects(const Sequence& s);
std::vector<std::string> names(const Sequence& s);
std::string to_string(const Sequence& s);

/// Tuples of distinct pairwise compatible registry ids of length k, in lexicographic order.
std::vector<std::vector<int>> enumerate_ordered(const Registry& r, int k);
/// Unordered version: strictly increasing tuples.
std::vector<std::vector<int>> enumerate_unordered(const Registry& r, int k);

/// All signed τ-exceptional sequences of length k, built level by level.
std::vector<Sequence> enumerate_sequences(const Level& root, int k, const std::optional<SignedObject>& last = {});
std::size_t count_sequences(const Level& root, int k, const std::optional<SignedObject>& last = {});

}  // namespace tauseq
