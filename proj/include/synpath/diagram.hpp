#pragma once

#include "synpath/codes.hpp"
#include "synpath/graph.hpp"
#include "synpath/numeric.hpp"

#include <map>
#include <string>
#include <vector>

namespace synpath {

struct KnSuccessor {
    int site;
    IncreasingCode code;
};
struct KnnSuccessor {
    int site;
    int sign;  // -1: alpha - delta_n, +1: omega + delta_n
    BorderPairCode code;
};

std::vector<KnSuccessor> successors_kn(const IncreasingCode& phi);
std::vector<KnnSuccessor> successors_knn(const BorderPairCode& code);

struct Arrow {
    int from;  // vertex indices
    int to;
    int site;
    int sign;  // 0 for K_N
};

struct TransitionDiagram {
    GraphSpec spec;
    std::vector<SyncCode> vertices;  // sorted by (level, code text)
    std::vector<int> level;          // decoded edge count
    std::vector<Arrow> arrows;       // sorted by (from, to)
    std::vector<int> starts;
    int sink = -1;

    int index_of(const SyncCode& code) const;  // -1 if absent
    std::vector<std::size_t> level_sizes() const;

private:
    friend TransitionDiagram build_diagram(const GraphSpec&, std::size_t);
    std::map<std::string, int> index_;
};

constexpr std::size_t kMaxDiagramCodes = 10'000'000;

TransitionDiagram build_diagram(const GraphSpec& spec, std::size_t max_codes = kMaxDiagramCodes);

// Directed paths from `from` to the sink.
BigInt count_admissible_paths(const TransitionDiagram& diagram, const SyncCode& from);

struct StartCode {
    BorderPairCode code;
    bool balanced_compatible;
};
std::vector<StartCode> start_codes_knn(int N);

std::string export_dot(const TransitionDiagram& diagram);
std::string export_json(const TransitionDiagram& diagram);

}  // namespace synpath
