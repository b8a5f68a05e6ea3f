#pragma once

#include <cstdint>
#include <vector>

#include "arrangealex/free_word.hpp"
#include "arrangealex/marked_graph.hpp"

namespace arrangealex {

enum class WordPolicy {
  raw,            // words exactly as the propagation rules build them
  local_reduced,  // at actual crossings pick the shorter of two words equal by the local relation
};

struct WordPropagation {
  // per line, the word on each successive segment of its strand
  std::vector<std::vector<FreeWord>> history;
  // per sweep point, entering words bottom-up and their lines
  std::vector<std::vector<FreeWord>> entering;
  std::vector<std::vector<std::size_t>> entering_lines;
  std::vector<FreeWord> final_words;
};

WordPropagation propagate_words(const MarkedTwoGraph& graph, WordPolicy policy = WordPolicy::raw);

// Drops consecutive repeats from a strand history.
std::vector<FreeWord> distinct_history(const std::vector<FreeWord>& h);

// Commutator relation [beta, b] = beta b beta^-1 b^-1.
struct Relation {
  FreeWord beta;
  FreeWord b;
  std::size_t point = 0;
  FreeWord relator() const { return commutator(beta, b); }
};

struct Presentation {
  std::size_t generator_count = 0;
  std::vector<Relation> relations;
  // the remaining fields are filled for arrangement presentations only
  std::vector<FreeWord> beta;
  std::vector<std::vector<FreeWord>> local_words;
  std::vector<std::vector<std::size_t>> local_lines;
  std::vector<SingularPoint> points;
};

Presentation presentation_from_graph(const MarkedTwoGraph& graph, WordPolicy policy = WordPolicy::raw);
Presentation presentation(const Arrangement& arr, std::uint64_t seed = 0, WordPolicy policy = WordPolicy::raw);
std::vector<FreeWord> beta_words(const Arrangement& arr, std::uint64_t seed = 0);

// <b_1..b_s, a | [b_j, a]>, generators b_1..b_s first and a last.
Presentation surface_times_circle(std::size_t s);

}  // namespace arrangealex
