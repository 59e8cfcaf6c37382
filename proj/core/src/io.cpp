// Copyright 2026 The extractorlab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "extractorlab/io.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

namespace extractorlab {

std::string format_double(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string to_string(Mode mode) {
  return mode == Mode::Strong ? "strong" : "weak";
}

Mode mode_from_string(const std::string& s) {
  if (s == "strong") return Mode::Strong;
  if (s == "weak") return Mode::Weak;
  throw ParseError("unknown mode: " + s);
}

namespace {

double parse_double(const std::string& tok) {
  double v = 0.0;
  const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size()) {
    throw ParseError("bad numeric token: " + tok);
  }
  return v;
}

long parse_long(const std::string& tok) {
  long v = 0;
  const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size()) {
    throw ParseError("bad integer token: " + tok);
  }
  return v;
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream ss(line);
  std::string t;
  while (ss >> t) toks.push_back(t);
  return toks;
}

std::string next_content_line(std::istream& in) {
  std::string line;
  while (std::getline(in, line)) {
    if (!tokens_of(line).empty()) return line;
  }
  return {};
}

}  // namespace

void write_function_family(std::ostream& out, const FunctionFamily& fam) {
  out << fam.n << ' ' << fam.m << ' ' << format_double(fam.seed_bits()) << ' '
      << to_string(fam.mode) << '\n';
  for (const auto& t : fam.tables) {
    for (size_t x = 0; x < t.size(); ++x) {
      if (x != 0) out << ' ';
      out << t[x];
    }
    out << '\n';
  }
}

FunctionFamily read_function_family(std::istream& in) {
  const auto header = tokens_of(next_content_line(in));
  if (header.size() != 4) throw ParseError("bad family header");
  FunctionFamily fam;
  fam.n = static_cast<int>(parse_long(header[0]));
  fam.m = static_cast<int>(parse_long(header[1]));
  const double d = parse_double(header[2]);
  fam.mode = mode_from_string(header[3]);
  if (fam.n < 0 || fam.n > 16 || fam.m < 0 || fam.m > fam.n) {
    throw ParseError("bad family sizes");
  }
  const auto dn = size_t{1} << fam.n;
  std::string line;
  while (std::getline(in, line)) {
    const auto toks = tokens_of(line);
    if (toks.empty()) continue;
    if (toks.size() != dn) throw ParseError("bad table row length");
    std::vector<std::uint16_t> row(dn);
    for (size_t x = 0; x < dn; ++x) {
      const long y = parse_long(toks[x]);
      if (y < 0 || y >= (1L << fam.m)) throw ParseError("output symbol out of range");
      row[x] = static_cast<std::uint16_t>(y);
    }
    fam.tables.push_back(std::move(row));
  }
  if (fam.tables.empty()) throw ParseError("family has no members");
  if (std::abs(fam.seed_bits() - d) > 1e-9) {
    throw ParseError("header seed size disagrees with member count");
  }
  fam.validate();
  return fam;
}

void write_unitary_family(std::ostream& out, const UnitaryFamily& fam) {
  out << fam.n << ' ' << fam.m << ' ' << fam.count() << ' '
      << to_string(fam.mode) << '\n';
  for (const auto& u : fam.unitaries) {
    bool first = true;
    for (Index r = 0; r < u.rows(); ++r) {
      for (Index c = 0; c < u.cols(); ++c) {
        if (!first) out << ' ';
        first = false;
        out << format_double(u(r, c).real()) << ' '
            << format_double(u(r, c).imag());
      }
    }
    out << '\n';
  }
}

UnitaryFamily read_unitary_family(std::istream& in) {
  const auto header = tokens_of(next_content_line(in));
  if (header.size() != 4) throw ParseError("bad family header");
  UnitaryFamily fam;
  fam.n = static_cast<int>(parse_long(header[0]));
  fam.m = static_cast<int>(parse_long(header[1]));
  const long count = parse_long(header[2]);
  fam.mode = mode_from_string(header[3]);
  if (fam.n < 0 || fam.n > 10 || fam.m < 0 || fam.m > fam.n || count < 1) {
    throw ParseError("bad family sizes");
  }
  const Index dn = Index{1} << fam.n;
  const size_t per_row = static_cast<size_t>(2 * dn * dn);
  std::string line;
  while (std::getline(in, line)) {
    const auto toks = tokens_of(line);
    if (toks.empty()) continue;
    if (toks.size() != per_row) throw ParseError("bad unitary row length");
    Mat u(dn, dn);
    size_t pos = 0;
    for (Index r = 0; r < dn; ++r) {
      for (Index c = 0; c < dn; ++c) {
        const double re = parse_double(toks[pos++]);
        const double im = parse_double(toks[pos++]);
        u(r, c) = Complex(re, im);
      }
    }
    fam.unitaries.push_back(std::move(u));
  }
  if (std::ssize(fam.unitaries) != count) {
    throw ParseError("header member count disagrees with rows");
  }
  fam.validate();
  return fam;
}

AnyFamily read_family_auto(std::istream& in) {
  std::stringstream buffered;
  buffered << in.rdbuf();
  const std::string content = buffered.str();

  std::istringstream probe(content);
  const auto header = tokens_of(next_content_line(probe));
  if (header.size() != 4) throw ParseError("bad family header");
  const int n = static_cast<int>(parse_long(header[0]));
  if (n < 0 || n > 16) throw ParseError("bad family sizes");
  const auto first_row = tokens_of(next_content_line(probe));
  const auto unitary_len = static_cast<size_t>(2) << (2 * n);

  std::istringstream again(content);
  if (first_row.size() == unitary_len && n <= 10) {
    return read_unitary_family(again);
  }
  if (first_row.size() == (size_t{1} << n)) {
    return read_function_family(again);
  }
  throw ParseError("file is neither a function nor a unitary family");
}

void write_state(std::ostream& out, const BipartiteState& state) {
  const char* kind = state.kind == StateKind::ClassicalClassical ? "cc"
                     : state.kind == StateKind::ClassicalQuantum ? "cq"
                                                                 : "qq";
  out << state.dim_n << ' ' << state.dim_r << ' ' << kind << '\n';
  for (Index r = 0; r < state.rho.rows(); ++r) {
    for (Index c = 0; c < state.rho.cols(); ++c) {
      if (c != 0) out << ' ';
      out << format_double(state.rho(r, c).real()) << ' '
          << format_double(state.rho(r, c).imag());
    }
    out << '\n';
  }
}

BipartiteState read_state(std::istream& in) {
  const auto header = tokens_of(next_content_line(in));
  if (header.size() != 3) throw ParseError("bad state header");
  const Index dn = parse_long(header[0]);
  const Index dr = parse_long(header[1]);
  StateKind kind;
  if (header[2] == "cc") {
    kind = StateKind::ClassicalClassical;
  } else if (header[2] == "cq") {
    kind = StateKind::ClassicalQuantum;
  } else if (header[2] == "qq") {
    kind = StateKind::QuantumQuantum;
  } else {
    throw ParseError("unknown state kind: " + header[2]);
  }
  if (dn < 1 || dr < 1 || dn * dr > (Index{1} << 12)) {
    throw ParseError("bad state dimensions");
  }
  const Index dim = dn * dr;
  Mat rho(dim, dim);
  std::vector<std::string> toks;
  std::string line;
  while (std::getline(in, line)) {
    for (auto& t : tokens_of(line)) toks.push_back(std::move(t));
  }
  if (std::ssize(toks) != 2 * dim * dim) {
    throw ParseError("state entry count mismatch");
  }
  size_t pos = 0;
  for (Index r = 0; r < dim; ++r) {
    for (Index c = 0; c < dim; ++c) {
      const double re = parse_double(toks[pos++]);
      const double im = parse_double(toks[pos++]);
      rho(r, c) = Complex(re, im);
    }
  }
  try {
    return BipartiteState(std::move(rho), dn, dr, kind);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid state: ") + e.what());
  }
}

void write_classical_state(std::ostream& out, const ClassicalState& p) {
  Mat rho = Mat::Zero(p.size(), p.size());
  for (Index i = 0; i < p.size(); ++i) rho(i, i) = p.probs[i];
  write_state(out, BipartiteState(std::move(rho), p.size(), 1,
                                  StateKind::ClassicalClassical));
}

}  // namespace extractorlab
