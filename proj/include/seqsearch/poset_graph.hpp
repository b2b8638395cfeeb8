#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "seqsearch/errors.hpp"

namespace seqsearch {

// Arms are labelled 1..n everywhere in the public interface.
using Arm = int;
using Edge = std::pair<Arm, Arm>;

// An ordered, duplicate-free arm sequence. Validity depends on a Dag; see is_search().
using Search = std::vector<Arm>;

inline constexpr std::size_t kDefaultExhaustiveLimit = 10;

// Precedence DAG over arms 1..n. Edge (u, v) means u must be examined before v.
// Immutable once built; construct through validate_dag().
class Dag {
public:
    std::size_t size() const noexcept { return preds_.size(); }
    bool edgeless() const noexcept { return edges_.empty(); }

    // Sorted, deduplicated edge list.
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    std::span<const Arm> predecessors(Arm a) const;
    std::span<const Arm> successors(Arm a) const;

    // Throws InvalidVertexLabel unless 1 <= a <= size().
    void check_label(Arm a) const;

    friend bool operator==(const Dag&, const Dag&) = default;

private:
    friend Dag validate_dag(std::size_t n, std::span<const Edge> edges);
    Dag() = default;

    std::vector<Edge> edges_;
    std::vector<std::vector<Arm>> preds_;
    std::vector<std::vector<Arm>> succs_;
};

// Builds a Dag, dropping duplicate edges. Throws InvalidVertexLabel, CycleDetected
// (self-loops are reported as cycles of length one) or InvalidParameters for n == 0.
Dag validate_dag(std::size_t n, std::span<const Edge> edges);
Dag edgeless_dag(std::size_t n);

// DAG text format: first non-comment line is n, then one "u v" edge per line.
// Lines starting with '#' and blank lines are ignored.
Dag read_dag(std::istream& in);
Dag load_dag(const std::filesystem::path& path);
void write_dag(std::ostream& out, const Dag& dag);

bool is_search(const Dag& dag, std::span<const Arm> seq);
bool is_initial_set(const Dag& dag, std::span<const Arm> arms);

// Depth-first enumeration of every search of a Dag, the empty one included.
// A search is always produced before any of its extensions, and candidate arms
// are tried in ascending label order, so the sequence is deterministic.
class SearchEnumerator {
public:
    explicit SearchEnumerator(const Dag& dag, std::size_t limit = kDefaultExhaustiveLimit);

    // Advances to the next search; false once the enumeration is exhausted.
    bool next();
    const Search& current() const noexcept { return search_; }

private:
    const Dag* dag_;
    Search search_;
    std::vector<Arm> cursor_;
    std::vector<int> missing_preds_;
    std::vector<char> used_;
    bool started_ = false;
};

template <class Visitor>
void for_each_search(const Dag& dag, Visitor&& visit, std::size_t limit = kDefaultExhaustiveLimit) {
    SearchEnumerator it(dag, limit);
    while (it.next()) visit(it.current());
}

std::vector<Search> enumerate_searches(const Dag& dag, std::size_t limit = kDefaultExhaustiveLimit);

}  // namespace seqsearch
