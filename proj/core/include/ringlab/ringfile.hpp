#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ringlab/poly.hpp"

namespace ringlab {

struct ParseError : std::runtime_error {
  std::size_t line, col;
  ParseError(std::size_t l, std::size_t c, const std::string& what)
      : std::runtime_error("line " + std::to_string(l) + ", col " +
                           std::to_string(c) + ": " + what),
        line(l),
        col(c) {}
};

struct ModuleSpec {
  std::string name;
  bool is_quotient = true;
  std::vector<Poly> quotient_gens;          // when is_quotient
  std::vector<std::vector<Poly>> matrix;    // rows of relation columns otherwise
};

// parsed form of the on-disk ring description
struct RingFile {
  bool rational_field = false;  // QQ instead of GF(p)
  long long prime = 32003;
  Presentation pres;
  std::optional<Poly> inverse_system;
  std::vector<ModuleSpec> modules;

  const ModuleSpec* find_module(const std::string& name) const {
    for (auto& m : modules)
      if (m.name == name) return &m;
    return nullptr;
  }
};

RingFile parse_ring_file(const std::string& text);
std::string print_ring_file(const RingFile& rf);

// standalone polynomial parser over a fixed variable list ('*' is optional,
// '^' for powers, integer or a/b coefficients)
Poly parse_poly(const std::string& text, const std::vector<std::string>& vars,
                std::size_t line_no = 0);

}  // namespace ringlab
