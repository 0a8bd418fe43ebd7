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

#include "treeprobe/cnf.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>

namespace treeprobe {

Var Formula::new_vars(int k) {
  if (k <= 0) throw std::invalid_argument("new_vars: k must be positive");
  Var first = num_vars_ + 1;
  num_vars_ += k;
  return first;
}

void Formula::check_var(Var v) const {
  if (v < 1 || v > num_vars_)
    throw std::out_of_range("variable " + std::to_string(v) +
                            " not allocated (num_vars=" +
                            std::to_string(num_vars_) + ")");
}

bool Formula::add_clause(std::vector<Lit> lits) {
  if (lits.empty()) {
    has_empty_clause_ = true;
    return true;
  }
  for (Lit l : lits) check_var(l.var());
  std::sort(lits.begin(), lits.end());
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  for (std::size_t i = 0; i + 1 < lits.size(); ++i)
    if (lits[i].var() == lits[i + 1].var()) return false;  // tautology
  clauses_.push_back(Clause{std::move(lits)});
  return true;
}

void Formula::add_xor(XorConstraint x) {
  for (Var v : x.vars) check_var(v);
  std::sort(x.vars.begin(), x.vars.end());
  // x ^ x = 0: repeated variables cancel pairwise.
  std::vector<Var> kept;
  for (std::size_t i = 0; i < x.vars.size();) {
    std::size_t j = i;
    while (j < x.vars.size() && x.vars[j] == x.vars[i]) ++j;
    if ((j - i) % 2 == 1) kept.push_back(x.vars[i]);
    i = j;
  }
  x.vars = std::move(kept);
  xors_.push_back(std::move(x));
}

namespace {

// Direct CNF for xor(vars) = parity: one clause per wrong-parity assignment.
void emit_direct_parity(Formula& f, const std::vector<Var>& vars, bool parity) {
  const std::size_t m = vars.size();
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    bool assignment_parity = (std::popcount(mask) & 1) != 0;
    if (assignment_parity == parity) continue;  // satisfies the xor
    std::vector<Lit> clause;
    clause.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
      bool bit = (mask >> i) & 1;
      clause.push_back(Lit(vars[i], !bit));  // excludes this assignment
    }
    f.add_clause(std::move(clause));
  }
}

}  // namespace

void Formula::lower_xors(int chunk_size) {
  if (chunk_size < 2) throw std::invalid_argument("xor chunk_size must be >= 2");
  std::vector<XorConstraint> pending;
  pending.swap(xors_);
  for (XorConstraint& x : pending) {
    if (x.vars.empty()) {
      if (x.parity) has_empty_clause_ = true;  // 0 = 1: unsatisfiable
      continue;
    }
    std::vector<Var> rest = std::move(x.vars);
    // Chain: cut off chunk_size-1 vars at a time, tying them to a fresh
    // auxiliary that carries their parity into the remainder.
    while (rest.size() > static_cast<std::size_t>(chunk_size)) {
      std::vector<Var> group(rest.begin(), rest.begin() + (chunk_size - 1));
      rest.erase(rest.begin(), rest.begin() + (chunk_size - 1));
      Var aux = new_var();
      group.push_back(aux);
      emit_direct_parity(*this, group, false);  // aux = xor(group)
      rest.insert(rest.begin(), aux);
    }
    emit_direct_parity(*this, rest, x.parity);
  }
}

void Formula::add_to_projection(Var v) {
  check_var(v);
  auto it = std::lower_bound(projection_.begin(), projection_.end(), v);
  if (it == projection_.end() || *it != v) projection_.insert(it, v);
}

void Formula::set_projection(std::vector<Var> vars) {
  for (Var v : vars) check_var(v);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  projection_ = std::move(vars);
}

std::string Formula::to_dimacs() const {
  if (!xors_.empty())
    throw std::logic_error(
        "to_dimacs: XOR constraints pending; call lower_xors first");
  std::ostringstream out;
  out << "p cnf " << num_vars_ << ' ' << num_clauses() << '\n';
  for (std::size_t i = 0; i < projection_.size(); i += 10) {
    out << "c ind";
    for (std::size_t j = i; j < std::min(i + 10, projection_.size()); ++j)
      out << ' ' << projection_[j];
    out << " 0\n";
  }
  if (has_empty_clause_) out << "0\n";
  for (const Clause& c : clauses_) {
    for (Lit l : c.lits) out << l.dimacs() << ' ';
    out << "0\n";
  }
  return out.str();
}

Formula parse_dimacs(std::istream& in) {
  Formula f;
  std::vector<Var> projection;
  bool saw_header = false;
  int declared_vars = 0;
  std::vector<Lit> current;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "c") {
      std::string kind;
      if (ls >> kind && kind == "ind") {
        int v;
        while (ls >> v && v != 0) projection.push_back(v);
      }
      continue;
    }
    if (tok == "p") {
      std::string fmt;
      int nclauses = 0;
      if (!(ls >> fmt >> declared_vars >> nclauses) || fmt != "cnf")
        throw std::runtime_error("malformed DIMACS header: " + line);
      if (declared_vars < 0)
        throw std::runtime_error("negative variable count in header");
      if (declared_vars > 0) f.new_vars(declared_vars);
      saw_header = true;
      continue;
    }
    if (!saw_header) throw std::runtime_error("clause before DIMACS header");
    ls.clear();
    ls.str(line);
    int code;
    while (ls >> code) {
      if (code == 0) {
        f.add_clause(current);
        current.clear();
      } else {
        int v = code < 0 ? -code : code;
        if (v > declared_vars)
          throw std::runtime_error("literal " + std::to_string(code) +
                                   " exceeds declared variable count");
        current.push_back(Lit::from_dimacs(code));
      }
    }
  }
  if (!saw_header) throw std::runtime_error("missing DIMACS header");
  if (!current.empty()) throw std::runtime_error("unterminated final clause");
  f.set_projection(std::move(projection));
  return f;
}

Formula parse_dimacs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_dimacs(in);
}

}  // namespace treeprobe
