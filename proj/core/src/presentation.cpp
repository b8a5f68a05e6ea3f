#include "arrangealex/presentation.hpp"

#include <algorithm>

#include "arrangealex/error.hpp"

namespace arrangealex {

namespace {

// Exit words of an actual crossing, bottom-up, from entering words b_1..b_r.
std::vector<FreeWord> actual_exit(const std::vector<FreeWord>& b, WordPolicy policy) {
  std::size_t r = b.size();
  std::vector<FreeWord> out(r);
  FreeWord suffix;  // b_{j+1} ... b_r
  for (std::size_t j = r; j-- > 0;) {
    FreeWord w = b[j].conjugated_by(suffix);
    if (policy == WordPolicy::local_reduced) {
      FreeWord prefix;  // b_1 ... b_{j-1}
      for (std::size_t i = 0; i < j; ++i) prefix *= b[i];
      FreeWord alt = b[j].conjugated_by(prefix.inverse());
      if (alt.length() <= w.length()) w = alt;
    }
    out[r - 1 - j] = w;
    suffix = b[j] * suffix;
  }
  return out;
}

}  // namespace

WordPropagation propagate_words(const MarkedTwoGraph& graph, WordPolicy policy) {
  std::size_t m = graph.line_count;
  WordPropagation wp;
  wp.history.resize(m);
  wp.entering.resize(graph.points.size());
  wp.entering_lines.resize(graph.points.size());
  std::vector<std::size_t> ord = graph.initial_order;
  std::vector<FreeWord> words(m);  // by slot
  for (std::size_t q = 0; q < m; ++q) {
    words[q] = FreeWord::generator(ord[q]);
    wp.history[ord[q]].push_back(words[q]);
  }
  for (const auto& c : graph.crossings) {
    std::size_t lo = c.position;
    if (c.kind == CrossingKind::virtual_crossing) {
      FreeWord A = words[lo], B = words[lo + 1];
      if (c.sign > 0) {
        words[lo] = B;
        words[lo + 1] = A.conjugated_by(B);
      } else {
        words[lo] = B.conjugated_by(A.inverse());
        words[lo + 1] = A;
      }
      std::swap(ord[lo], ord[lo + 1]);
      wp.history[ord[lo]].push_back(words[lo]);
      wp.history[ord[lo + 1]].push_back(words[lo + 1]);
    } else {
      std::size_t r = c.strands.size();
      std::vector<FreeWord> in(words.begin() + lo, words.begin() + lo + r);
      wp.entering[c.point] = in;
      wp.entering_lines[c.point] = c.strands;
      auto out = actual_exit(in, policy);
      std::reverse(ord.begin() + lo, ord.begin() + lo + r);
      for (std::size_t q = 0; q < r; ++q) {
        words[lo + q] = out[q];
        wp.history[ord[lo + q]].push_back(out[q]);
      }
    }
  }
  wp.final_words.resize(m);
  for (std::size_t q = 0; q < m; ++q) wp.final_words[ord[q]] = words[q];
  return wp;
}

std::vector<FreeWord> distinct_history(const std::vector<FreeWord>& h) {
  std::vector<FreeWord> out;
  for (const auto& w : h)
    if (out.empty() || out.back() != w) out.push_back(w);
  return out;
}

Presentation presentation_from_graph(const MarkedTwoGraph& graph, WordPolicy policy) {
  WordPropagation wp = propagate_words(graph, policy);
  Presentation p;
  p.generator_count = graph.line_count;
  p.points = graph.points;
  for (std::size_t k = 0; k < graph.points.size(); ++k) {
    const auto& b = wp.entering[k];
    if (b.size() != graph.points[k].multiplicity())
      fail(ErrorCode::internal, "singular point " + std::to_string(k + 1) + " was not traced");
    FreeWord beta;
    for (const auto& w : b) beta *= w;
    p.beta.push_back(beta);
    p.local_words.push_back(b);
    p.local_lines.push_back(wp.entering_lines[k]);
    for (std::size_t j = 0; j + 1 < b.size(); ++j) p.relations.push_back({beta, b[j], k});
  }
  return p;
}

Presentation presentation(const Arrangement& arr, std::uint64_t seed, WordPolicy policy) {
  FramedArrangement fa = choose_generic_frame(arr, seed);
  return presentation_from_graph(trace_graph(arr, fa.frame), policy);
}

std::vector<FreeWord> beta_words(const Arrangement& arr, std::uint64_t seed) {
  return presentation(arr, seed).beta;
}

Presentation surface_times_circle(std::size_t s) {
  Presentation p;
  p.generator_count = s + 1;
  FreeWord a = FreeWord::generator(s);
  for (std::size_t j = 0; j < s; ++j) p.relations.push_back({FreeWord::generator(j), a, j});
  return p;
}

}  // namespace arrangealex
