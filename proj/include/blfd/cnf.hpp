#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "blfd/graph.hpp"

namespace blfd {

/// Variables are numbered from 0; DIMACS files use var + 1.
struct Literal {
  std::size_t var = 0;
  bool positive = true;

  friend bool operator==(const Literal&, const Literal&) = default;
};

using Assignment = std::vector<bool>;

/// Every clause has three distinct literals, and each variable occurs
/// exactly twice positively and twice negatively.
struct Cnf3B2 {
  std::size_t num_vars = 0;
  std::vector<std::array<Literal, 3>> clauses;

  void validate() const {
    if (num_vars == 0) throw std::invalid_argument("formula has no variables");
    std::vector<std::array<int, 2>> seen(num_vars, {0, 0});
    for (std::size_t c = 0; c < clauses.size(); ++c) {
      const auto& cl = clauses[c];
      for (std::size_t i = 0; i < 3; ++i) {
        if (cl[i].var >= num_vars) throw std::invalid_argument("clause " + std::to_string(c + 1) + ": variable out of range");
        for (std::size_t j = 0; j < i; ++j) {
          if (cl[i] == cl[j]) throw std::invalid_argument("clause " + std::to_string(c + 1) + " repeats a literal");
        }
        ++seen[cl[i].var][cl[i].positive];
      }
    }
    for (std::size_t x = 0; x < num_vars; ++x) {
      if (seen[x][0] != 2 || seen[x][1] != 2) {
        throw std::invalid_argument("variable " + std::to_string(x + 1) + " occurs " + std::to_string(seen[x][1]) +
                                    " times positively and " + std::to_string(seen[x][0]) +
                                    " times negatively; both must be 2");
      }
    }
  }

  bool satisfied_by(const Assignment& phi) const {
    for (const auto& cl : clauses) {
      bool ok = false;
      for (const Literal& l : cl) ok = ok || phi.at(l.var) == l.positive;
      if (!ok) return false;
    }
    return true;
  }
};

/// Monotone clauses of three variables (repeats allowed); a clause needs one
/// true and one false variable.
struct CnfMnae {
  std::size_t num_vars = 0;
  std::vector<std::array<std::size_t, 3>> clauses;

  void validate() const {
    if (num_vars == 0) throw std::invalid_argument("formula has no variables");
    for (std::size_t c = 0; c < clauses.size(); ++c) {
      for (std::size_t x : clauses[c]) {
        if (x >= num_vars) throw std::invalid_argument("clause " + std::to_string(c + 1) + ": variable out of range");
      }
    }
  }

  std::vector<std::size_t> occurrences() const {
    std::vector<std::size_t> occ(num_vars, 0);
    for (const auto& cl : clauses) {
      for (std::size_t x : cl) ++occ.at(x);
    }
    return occ;
  }

  bool satisfied_by(const Assignment& phi) const {
    for (const auto& cl : clauses) {
      bool t = false, f = false;
      for (std::size_t x : cl) (phi.at(x) ? t : f) = true;
      if (!t || !f) return false;
    }
    return true;
  }
};

/// First satisfying assignment in binary counting order, if any.
template <class Formula>
std::optional<Assignment> brute_sat(const Formula& f) {
  if (f.num_vars > 24) throw std::length_error("brute_sat is limited to 24 variables");
  Assignment phi(f.num_vars);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << f.num_vars); ++mask) {
    for (std::size_t x = 0; x < f.num_vars; ++x) phi[x] = (mask >> x) & 1;
    if (f.satisfied_by(phi)) return phi;
  }
  return std::nullopt;
}

/// Random (3,B2) formula on n variables (n divisible by 3): the 4n literal
/// occurrences are shuffled into clauses until no clause repeats a literal.
template <class Rng>
Cnf3B2 random_3b2(Rng& rng, std::size_t n) {
  if (n == 0 || n % 3 != 0) throw std::invalid_argument("(3,B2) formulas need a positive multiple of 3 variables");
  std::vector<Literal> pool;
  for (std::size_t x = 0; x < n; ++x) {
    for (int i = 0; i < 2; ++i) {
      pool.push_back({x, true});
      pool.push_back({x, false});
    }
  }
  while (true) {
    std::shuffle(pool.begin(), pool.end(), rng);
    Cnf3B2 f{n, {}};
    bool ok = true;
    for (std::size_t i = 0; i < pool.size() && ok; i += 3) {
      std::array<Literal, 3> c{pool[i], pool[i + 1], pool[i + 2]};
      ok = !(c[0] == c[1] || c[0] == c[2] || c[1] == c[2]);
      f.clauses.push_back(c);
    }
    if (ok) return f;
  }
}

/// Random MNAE formula with m clauses of three distinct variables in which
/// every variable occurs at least twice (needs 3m >= 2n).
template <class Rng>
CnfMnae random_mnae(Rng& rng, std::size_t n, std::size_t m) {
  if (n < 3 || 3 * m < 2 * n) throw std::invalid_argument("need n >= 3 and 3m >= 2n");
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  while (true) {
    CnfMnae f{n, {}};
    for (std::size_t c = 0; c < m; ++c) {
      std::array<std::size_t, 3> cl{};
      do {
        for (auto& x : cl) x = pick(rng);
      } while (cl[0] == cl[1] || cl[0] == cl[2] || cl[1] == cl[2]);
      f.clauses.push_back(cl);
    }
    auto occ = f.occurrences();
    if (std::all_of(occ.begin(), occ.end(), [](std::size_t o) { return o >= 2; })) return f;
  }
}

// DIMACS with a flavour comment: "c 3B2" or "c MNAE" before the problem line.

using CnfDocument = std::variant<Cnf3B2, CnfMnae>;

inline CnfDocument parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line, flavour;
  std::size_t line_no = 0, vars = 0, declared = 0;
  bool header = false;
  std::vector<std::vector<long long>> clauses;
  std::vector<long long> current;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "c") {
      std::string word;
      if (ls >> word && (word == "3B2" || word == "MNAE") && flavour.empty()) flavour = word;
      continue;
    }
    if (first == "p") {
      std::string fmt;
      if (!(ls >> fmt >> vars >> declared) || fmt != "cnf") throw ParseError(line_no, "problem line must be 'p cnf <vars> <clauses>'");
      header = true;
      continue;
    }
    if (!header) throw ParseError(line_no, "clause before the problem line");
    std::istringstream all(line);
    long long lit;
    while (all >> lit) {
      if (lit == 0) {
        clauses.push_back(std::move(current));
        current.clear();
      } else {
        if (static_cast<std::size_t>(lit < 0 ? -lit : lit) > vars) throw ParseError(line_no, "literal out of range");
        current.push_back(lit);
      }
    }
    if (!all.eof()) throw ParseError(line_no, "clause lines hold integers only");
  }
  if (!header) throw ParseError(line_no, "missing problem line");
  if (!current.empty()) throw ParseError(line_no, "last clause is not terminated by 0");
  if (clauses.size() != declared) throw ParseError(line_no, "clause count differs from the problem line");
  if (flavour.empty()) throw ParseError(line_no, "missing 'c 3B2' or 'c MNAE' comment");
  for (const auto& cl : clauses) {
    if (cl.size() != 3) throw ParseError(line_no, "every clause needs exactly 3 literals");
  }
  if (flavour == "MNAE") {
    CnfMnae f{vars, {}};
    for (const auto& cl : clauses) {
      std::array<std::size_t, 3> c{};
      for (std::size_t i = 0; i < 3; ++i) {
        if (cl[i] < 0) throw ParseError(line_no, "MNAE clauses are monotone");
        c[i] = static_cast<std::size_t>(cl[i] - 1);
      }
      f.clauses.push_back(c);
    }
    f.validate();
    return f;
  }
  Cnf3B2 f{vars, {}};
  for (const auto& cl : clauses) {
    std::array<Literal, 3> c{};
    for (std::size_t i = 0; i < 3; ++i) c[i] = {static_cast<std::size_t>((cl[i] < 0 ? -cl[i] : cl[i]) - 1), cl[i] > 0};
    f.clauses.push_back(c);
  }
  f.validate();
  return f;
}

inline std::string serialize_dimacs(const Cnf3B2& f) {
  std::string out = "c 3B2\np cnf " + std::to_string(f.num_vars) + " " + std::to_string(f.clauses.size()) + "\n";
  for (const auto& cl : f.clauses) {
    for (const Literal& l : cl) out += (l.positive ? "" : "-") + std::to_string(l.var + 1) + " ";
    out += "0\n";
  }
  return out;
}

inline std::string serialize_dimacs(const CnfMnae& f) {
  std::string out = "c MNAE\np cnf " + std::to_string(f.num_vars) + " " + std::to_string(f.clauses.size()) + "\n";
  for (const auto& cl : f.clauses) {
    for (std::size_t x : cl) out += std::to_string(x + 1) + " ";
    out += "0\n";
  }
  return out;
}

/// Assignment text such as "101" or "T,F,T": one value per variable.
inline Assignment parse_assignment(std::string_view text, std::size_t num_vars) {
  Assignment phi;
  for (char c : text) {
    if (c == '1' || c == 'T' || c == 't') phi.push_back(true);
    else if (c == '0' || c == 'F' || c == 'f') phi.push_back(false);
    else if (c != ' ' && c != ',' && c != '\n') throw std::invalid_argument(std::string("bad assignment character '") + c + "'");
  }
  if (phi.size() != num_vars) throw std::invalid_argument("assignment must give exactly one value per variable");
  return phi;
}

}  // namespace blfd
