#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arrangealex/corpus.hpp"
#include "arrangealex/io.hpp"

namespace arrangealex {

struct CheckOptions {
  bool relaxed_epsilon = false;
  bool compare_word_policies = true;
};

// Every invariant-level check for one arrangement under one twist.
CaseResult check_case(const std::string& name, const Arrangement& arr, std::uint64_t seed, const NamedTwist& twist,
                      const CheckOptions& opt = {});

// Structural checks that do not depend on a twist: frame assumptions,
// abelianized loops, relation count.
CaseResult check_structure(const std::string& name, const Arrangement& arr, std::uint64_t seed);

struct VerifyJob {
  std::string name;
  Arrangement arrangement;
  std::uint64_t seed = 0;
  std::vector<NamedTwist> twists;  // empty: standard_twists
};

// Runs all jobs on up to `workers` threads (0: hardware concurrency);
// results come back sorted by case name.
std::vector<CaseResult> verify(const std::vector<VerifyJob>& jobs, unsigned workers = 0, const CheckOptions& opt = {});

std::vector<VerifyJob> corpus_jobs();

}  // namespace arrangealex
