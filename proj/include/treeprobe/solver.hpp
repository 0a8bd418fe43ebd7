// Copyright 2026 The treeprobe authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "treeprobe/cnf.hpp"

namespace treeprobe {

enum class SolveStatus { kSat, kUnsat, kUnknown };

// kUnknown means the conflict budget ran out; it is surfaced to callers as
// this exception wherever a definite answer is required.
struct BudgetExhausted : std::runtime_error {
  BudgetExhausted() : std::runtime_error("solver conflict budget exhausted") {}
};

struct SolverConfig {
  // 0 = unlimited. Exceeding the budget yields kUnknown, never a wrong answer.
  std::int64_t max_conflicts = 0;
  // Default branching: lowest unassigned variable, positive phase first.
  // Activity branching uses conflict-driven scores with phase saving.
  bool activity_branching = false;
  // Randomized branching order/phase; runs stay deterministic per seed.
  std::optional<std::uint64_t> seed;
  int xor_chunk_size = Formula::kDefaultXorChunk;
};

// Conflict-driven solver over one Formula snapshot. Pending XORs are lowered
// internally on a private copy; reported models cover the original variables.
// Single-caller; independent instances may run concurrently.
class Solver {
 public:
  explicit Solver(const Formula& formula, SolverConfig config = {});
  ~Solver();
  Solver(const Solver&) = delete;
  Solver& operator=(const Solver&) = delete;

  SolveStatus solve(std::span<const Lit> assumptions = {});
  SolveStatus solve(std::initializer_list<Lit> assumptions) {
    return solve(std::span<const Lit>(assumptions.begin(), assumptions.end()));
  }

  // Adds a clause at decision level 0 (any active search state is undone).
  // Returns false once the formula is unsatisfiable.
  bool add_clause(std::vector<Lit> lits);

  // Valid after a kSat result; covers variables of the original formula.
  bool model_value(Var v) const;
  std::vector<bool> model() const;

  std::int64_t conflicts() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

struct SolveResult {
  SolveStatus status = SolveStatus::kUnknown;
  // Indexed by Var (entry 0 unused); present iff status == kSat.
  std::vector<bool> model;
};

SolveResult solve(const Formula& formula, std::span<const Lit> assumptions = {},
                  SolverConfig config = {});

struct ProjectedModels {
  std::vector<Var> projection;              // sorted projection variables
  std::vector<std::vector<bool>> models;    // each parallel to `projection`
  bool exhausted = false;                   // true iff no further model exists
};

// Enumerates distinct projected models via blocking clauses on a scratch
// solver; the input formula is left untouched. Throws BudgetExhausted if the
// configured conflict budget runs out mid-enumeration.
ProjectedModels enumerate_projected(const Formula& formula, std::uint64_t limit,
                                    SolverConfig config = {});

}  // namespace treeprobe
