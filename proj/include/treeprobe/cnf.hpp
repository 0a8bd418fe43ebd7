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
#include <initializer_list>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace treeprobe {

// Variables are dense positive integers, allocated from 1 by Formula::new_var.
using Var = int;

// A literal is a signed DIMACS code: +v or -v.
class Lit {
 public:
  Lit() = default;
  Lit(Var v, bool positive) : code_(positive ? v : -v) {}

  static Lit from_dimacs(int code) {
    Lit l;
    l.code_ = code;
    return l;
  }

  Var var() const { return code_ < 0 ? -code_ : code_; }
  bool positive() const { return code_ > 0; }
  int dimacs() const { return code_; }

  Lit operator~() const { return from_dimacs(-code_); }

  friend bool operator==(Lit a, Lit b) { return a.code_ == b.code_; }
  friend bool operator!=(Lit a, Lit b) { return a.code_ != b.code_; }
  friend bool operator<(Lit a, Lit b) {
    if (a.var() != b.var()) return a.var() < b.var();
    return a.code_ < b.code_;
  }

 private:
  int code_ = 0;
};

inline Lit pos(Var v) { return Lit(v, true); }
inline Lit neg(Var v) { return Lit(v, false); }

// Normalized disjunction: literals sorted by variable, no duplicates.
// Tautologies are filtered out before a Clause is ever stored.
struct Clause {
  std::vector<Lit> lits;
};

// Parity constraint: xor of vars equals parity. Vars are kept sorted and
// duplicate-free (a repeated variable cancels).
struct XorConstraint {
  std::vector<Var> vars;
  bool parity = false;
};

// CNF formula with native XOR constraints and a projection (sampling) set.
// Copying a Formula yields a fully independent snapshot.
class Formula {
 public:
  static constexpr int kDefaultXorChunk = 4;

  Var new_var() { return ++num_vars_; }
  // Allocates k consecutive variables and returns the first one.
  Var new_vars(int k);

  int num_vars() const { return num_vars_; }

  // Normalizes and stores the clause. Returns false when the clause was a
  // tautology and was dropped. An empty clause marks the formula unsatisfiable.
  bool add_clause(std::vector<Lit> lits);
  bool add_clause(std::initializer_list<Lit> lits) {
    return add_clause(std::vector<Lit>(lits));
  }

  void add_xor(XorConstraint x);

  // Lowers every pending XOR to CNF through chunked parity splitting with
  // fresh auxiliary variables. Auxiliaries never join the projection set.
  void lower_xors(int chunk_size = kDefaultXorChunk);

  bool has_pending_xors() const { return !xors_.empty(); }
  bool has_empty_clause() const { return has_empty_clause_; }

  void add_to_projection(Var v);
  void set_projection(std::vector<Var> vars);
  const std::vector<Var>& projection() const { return projection_; }

  const std::vector<Clause>& clauses() const { return clauses_; }
  const std::vector<XorConstraint>& xors() const { return xors_; }
  std::size_t num_clauses() const {
    return clauses_.size() + (has_empty_clause_ ? 1 : 0);
  }

  // DIMACS export; projection goes out as `c ind ... 0` comment lines.
  // Throws std::logic_error while XORs are still pending.
  std::string to_dimacs() const;

 private:
  void check_var(Var v) const;

  int num_vars_ = 0;
  std::vector<Clause> clauses_;
  std::vector<XorConstraint> xors_;
  std::vector<Var> projection_;  // sorted, unique
  bool has_empty_clause_ = false;
};

// Parses DIMACS CNF text, honoring `c ind v1 v2 ... 0` projection comments.
// Throws std::runtime_error on malformed input.
Formula parse_dimacs(std::istream& in);
Formula parse_dimacs_file(const std::string& path);

}  // namespace treeprobe
