// Copyright 2026 The quadsim Authors
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

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <set>

#include "quadsim/dsl/dsl.hpp"
#include "quadsim/error.hpp"

namespace quadsim::dsl {

using circuits::Circuit;
using circuits::Step;

namespace {

constexpr double kPi = std::numbers::pi;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::optional<long> parse_int(std::string_view s) {
  if (s.empty() || s.size() > 9) return std::nullopt;
  long v = 0;
  const char* first = s.data();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::optional<double> parse_decimal(std::string_view s) {
  if (s.empty()) return std::nullopt;
  double v = 0.0;
  const char* first = s.data();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

}  // namespace

std::string to_string(const Diagnostic& d, const std::string& file) {
  std::string out;
  if (!file.empty()) out += file + ":";
  out += std::to_string(d.line) + ":" + std::to_string(d.column) + ": ";
  out += d.severity == Severity::Error ? "error: " : "warning: ";
  return out + d.message;
}

std::optional<double> parse_real(std::string_view token) {
  token = trim(token);
  const auto slash = token.find('/');
  if (slash == std::string_view::npos) return parse_decimal(token);
  const auto p = parse_int(token.substr(0, slash));
  const auto q = parse_int(token.substr(slash + 1));
  if (!p || !q || *q <= 0) return std::nullopt;
  return static_cast<double>(*p) / static_cast<double>(*q);
}

std::optional<double> parse_angle(std::string_view token) {
  token = trim(token);
  const auto at = token.find("pi");
  if (at == std::string_view::npos) return parse_real(token);
  std::string_view coeff = token.substr(0, at);
  std::string_view rest = token.substr(at + 2);
  if (!coeff.empty() && coeff.back() == '*') coeff.remove_suffix(1);
  long p = 1;
  if (coeff == "-") {
    p = -1;
  } else if (coeff == "+" || coeff.empty()) {
    p = 1;
  } else {
    const auto v = parse_int(coeff);
    if (!v) return std::nullopt;
    p = *v;
  }
  long q = 1;
  if (!rest.empty()) {
    if (rest.front() != '/') return std::nullopt;
    const auto v = parse_int(rest.substr(1));
    if (!v || *v <= 0) return std::nullopt;
    q = *v;
  }
  return (static_cast<double>(p) * kPi) / static_cast<double>(q);
}

std::string format_real(double x) {
  for (long q = 1; q <= 64; ++q) {
    const double pd = std::round(x * static_cast<double>(q));
    if (std::abs(pd) > 1e9) break;
    const long p = static_cast<long>(pd);
    if (static_cast<double>(p) / static_cast<double>(q) == x)
      return q == 1 ? std::to_string(p) : std::to_string(p) + "/" + std::to_string(q);
  }
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

std::string format_angle(double radians) {
  if (radians == 0.0) return "0";
  for (long q = 1; q <= 64; ++q) {
    const double pd = std::round(radians / kPi * static_cast<double>(q));
    if (std::abs(pd) > 1e6) break;
    const long p = static_cast<long>(pd);
    if (p == 0) continue;
    if ((static_cast<double>(p) * kPi) / static_cast<double>(q) != radians) continue;
    std::string out = p == 1 ? "pi" : p == -1 ? "-pi" : std::to_string(p) + "pi";
    if (q != 1) out += "/" + std::to_string(q);
    return out;
  }
  return format_real(radians);
}

std::optional<ModeToken> parse_mode(std::string_view token) {
  ModeToken m;
  if (!token.empty() && (token.back() == 'H' || token.back() == 'V')) {
    m.pol = token.back() == 'H' ? fock::Pol::H : fock::Pol::V;
    token.remove_suffix(1);
  }
  bool primed = false;
  if (!token.empty() && token.back() == '\'') {
    primed = true;
    token.remove_suffix(1);
  }
  if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; }))
    return std::nullopt;
  const auto v = parse_int(token);
  if (!v || *v < 1) return std::nullopt;
  if (primed) {
    if (*v >= fock::kPrimedOffset) return std::nullopt;
    m.spatial = fock::primed(static_cast<int>(*v));
  } else {
    if (*v >= 2 * fock::kPrimedOffset) return std::nullopt;
    m.spatial = static_cast<int>(*v);
  }
  return m;
}

std::string format_mode(int spatial) { return fock::spatial_label(spatial); }

std::optional<detection::PatternLiteral> parse_literal(std::string_view text, std::string* error) {
  auto fail = [&](const std::string& msg) -> std::optional<detection::PatternLiteral> {
    if (error) *error = msg;
    return std::nullopt;
  };
  text = trim(text);
  detection::PatternLiteral lit;
  if (text == "vacuum") return lit;
  if (text.empty()) return fail("empty pattern");
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const std::string_view item = trim(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) return fail("expected mode=count in '" + std::string(item) + "'");
    const auto mode = parse_mode(trim(item.substr(0, eq)));
    if (!mode || mode->pol) return fail("bad mode in '" + std::string(item) + "'");
    std::string_view spec = trim(item.substr(eq + 1));
    detection::CountSpec cs;
    if (!spec.empty() && spec.front() >= '0' && spec.front() <= '9') {
      const auto n = parse_int(spec);
      if (!n || *n < 0) return fail("bad count '" + std::string(spec) + "'");
      cs.total = static_cast<int>(*n);
    } else {
      if (spec.empty()) return fail("missing count in '" + std::string(item) + "'");
      while (!spec.empty()) {
        const char pol = spec.front();
        if (pol != 'H' && pol != 'V') return fail("bad count '" + std::string(spec) + "'");
        spec.remove_prefix(1);
        std::size_t len = 0;
        while (len < spec.size() && spec[len] >= '0' && spec[len] <= '9') ++len;
        const auto n = parse_int(spec.substr(0, len));
        if (!n || *n < 0) return fail("bad count after " + std::string(1, pol));
        auto& slot = pol == 'H' ? cs.h : cs.v;
        if (slot) return fail(std::string("repeated ") + pol + " count");
        slot = static_cast<int>(*n);
        spec.remove_prefix(len);
      }
    }
    if (lit.entries.count(mode->spatial)) return fail("mode " + format_mode(mode->spatial) + " listed twice");
    lit.entries[mode->spatial] = cs;
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return lit;
}

std::optional<detection::Predicate> parse_predicate(std::string_view text, std::string* error) {
  text = trim(text);
  if (text.find('|') == std::string_view::npos) {
    if (auto named = detection::named_predicate_from_string(std::string(text))) return detection::Predicate{*named};
    if (text.find('=') == std::string_view::npos) {
      if (error) *error = "unknown predicate '" + std::string(text) + "'";
      return std::nullopt;
    }
  }
  std::vector<detection::PatternLiteral> alts;
  std::size_t start = 0;
  while (true) {
    const auto bar = text.find('|', start);
    const auto part = text.substr(start, bar == std::string_view::npos ? text.npos : bar - start);
    auto lit = parse_literal(part, error);
    if (!lit) return std::nullopt;
    alts.push_back(std::move(*lit));
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  return detection::Predicate{std::move(alts)};
}

namespace {

struct Token {
  std::string_view text;
  int column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) && line[j] != '#') ++j;
    out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

struct StatementError {
  int column;
  std::string message;
};

class Parser {
 public:
  ParseResult run(std::string_view text) {
    blocks_.push_back({&circuit_.steps, 0, {}, std::nullopt, {}});
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const auto nl = text.find('\n', pos);
      std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      ++line_no;
      line_ = line_no;
      const auto tokens = tokenize(line);
      if (!tokens.empty()) {
        try {
          statement(tokens, line);
        } catch (const StatementError& e) {
          error(e.column, e.message);
        } catch (const Error& e) {
          error(tokens.front().column, e.what());
        }
      }
      if (nl == std::string_view::npos) break;
      pos = nl + 1;
    }
    last_line_ = line_no;
    while (blocks_.size() > 1) {
      diagnostics_.push_back({blocks_.back().line, 1, "'when' block is not closed with 'end'", Severity::Error});
      blocks_.pop_back();
    }
    if (!have_modes_) diagnostics_.push_back({1, 1, "missing 'modes' declaration", Severity::Error});
    ParseResult result;
    const bool failed = std::any_of(diagnostics_.begin(), diagnostics_.end(),
                                    [](const Diagnostic& d) { return d.severity == Severity::Error; });
    if (!failed) {
      try {
        circuits::validate(circuit_);
        result.circuit = std::move(circuit_);
      } catch (const Error& e) {
        diagnostics_.push_back({std::max(1, last_line_), 1, e.what(), Severity::Error});
      }
    }
    result.diagnostics = std::move(diagnostics_);
    return result;
  }

 private:
  struct Block {
    std::vector<Step>* steps;
    int line;
    std::set<int> dead;
    // Index of a detect step that may still take accept/when.
    std::optional<std::size_t> open_detect;
    // Modes detected when the open detect ran; every arm starts from these.
    std::set<int> arm_start;
  };

  void error(int column, std::string message) {
    diagnostics_.push_back({line_, std::max(1, column), std::move(message), Severity::Error});
  }

  [[noreturn]] static void fail(const Token& t, std::string message) { throw StatementError{t.column, std::move(message)}; }

  static void arity(const std::vector<Token>& t, std::size_t n) {
    if (t.size() != n + 1)
      throw StatementError{t.size() > n + 1 ? t[n + 1].column : t.back().column + static_cast<int>(t.back().text.size()),
                           "'" + std::string(t[0].text) + "' takes " + std::to_string(n) + " argument" +
                               (n == 1 ? "" : "s") + ", got " + std::to_string(t.size() - 1)};
  }

  static void at_least(const std::vector<Token>& t, std::size_t n) {
    if (t.size() < n + 1)
      throw StatementError{t.back().column + static_cast<int>(t.back().text.size()),
                           "'" + std::string(t[0].text) + "' needs at least " + std::to_string(n) + " argument" +
                               (n == 1 ? "" : "s")};
  }

  static int count(const Token& t) {
    const auto v = parse_int(t.text);
    if (!v || *v < 0 || *v >= fock::kPrimedOffset) fail(t, "expected a mode count below 100, got '" + std::string(t.text) + "'");
    return static_cast<int>(*v);
  }

  bool declared(int spatial) const {
    if (fock::is_primed(spatial)) return spatial - fock::kPrimedOffset <= circuit_.primed;
    return spatial >= 1 && spatial <= circuit_.modes;
  }

  ModeToken mode(const Token& t, bool allow_pol, bool live = true) const {
    const auto m = parse_mode(t.text);
    if (!m) fail(t, "bad mode '" + std::string(t.text) + "'");
    if (m->pol && !allow_pol) fail(t, "polarization suffix not allowed here");
    if (!have_modes_ || !declared(m->spatial)) fail(t, "undeclared mode " + std::string(t.text));
    if (live && blocks_.back().dead.count(m->spatial)) fail(t, "mode " + std::string(t.text) + " was already detected");
    return *m;
  }

  std::vector<int> modes(const std::vector<Token>& t, std::size_t from, bool live = true) const {
    std::vector<int> out;
    for (std::size_t i = from; i < t.size(); ++i) {
      const int m = mode(t[i], false, live).spatial;
      if (std::find(out.begin(), out.end(), m) != out.end()) fail(t[i], "mode " + std::string(t[i].text) + " repeated");
      out.push_back(m);
    }
    return out;
  }

  static double angle(const Token& t) {
    const auto a = parse_angle(t.text);
    if (!a) fail(t, "bad angle '" + std::string(t.text) + "'");
    return *a;
  }

  static double real(const Token& t) {
    const auto a = parse_real(t.text);
    if (!a) fail(t, "bad number '" + std::string(t.text) + "'");
    return *a;
  }

  void push(Step step, bool opens_detect = false) {
    Block& b = blocks_.back();
    b.steps->push_back(std::move(step));
    b.open_detect = opens_detect ? std::optional<std::size_t>(b.steps->size() - 1) : std::nullopt;
  }

  circuits::DetectStep& open_detect(const Token& t) {
    Block& b = blocks_.back();
    if (!b.open_detect) fail(t, "'" + std::string(t.text) + "' must follow a detect statement");
    return std::get<circuits::DetectStep>((*b.steps)[*b.open_detect].op);
  }

  void require_header(const Token& t) const {
    if (!have_modes_) fail(t, "'modes' must be declared before '" + std::string(t.text) + "'");
  }

  circuits::TargetSpec target(const std::vector<Token>& t) const {
    at_least(t, 1);
    const auto family = circuits::target_family_from_string(std::string(t[1].text));
    if (!family) fail(t[1], "unknown target family '" + std::string(t[1].text) + "'");
    std::size_t end = t.size();
    bool strict = false;
    if (t.back().text == "strict") {
      strict = true;
      --end;
    }
    const std::size_t want = circuits::target_arity(*family);
    if (end - 2 != want)
      throw StatementError{t[1].column, "target " + std::string(t[1].text) + " takes " + std::to_string(want) + " modes"};
    std::vector<Token> mode_tokens(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(end));
    return {*family, modes(mode_tokens, 2, false), strict};
  }

  static std::string rest_of_line(std::string_view line, const Token& after) {
    const std::size_t start = static_cast<std::size_t>(after.column - 1) + after.text.size();
    std::string_view rest = line.substr(std::min(start, line.size()));
    const auto hash = rest.find('#');
    if (hash != std::string_view::npos) rest = rest.substr(0, hash);
    return std::string(trim(rest));
  }

  static std::string join_tokens(const std::vector<Token>& t, std::size_t from) {
    std::string out;
    for (std::size_t i = from; i < t.size(); ++i) {
      if (!out.empty()) out += ' ';
      out += t[i].text;
    }
    return out;
  }

  void statement(const std::vector<Token>& t, std::string_view line) {
    const std::string_view kw = t[0].text;
    const bool nested = blocks_.size() > 1;
    auto top_level_only = [&] {
      if (nested) fail(t[0], "'" + std::string(kw) + "' is not allowed inside a when block");
    };

    if (kw == "name") {
      top_level_only();
      circuit_.name = rest_of_line(line, t[0]);
    } else if (kw == "description") {
      top_level_only();
      circuit_.description = rest_of_line(line, t[0]);
    } else if (kw == "modes") {
      top_level_only();
      arity(t, 1);
      circuit_.modes = count(t[1]);
      if (circuit_.modes < 1) fail(t[1], "at least one mode is required");
      have_modes_ = true;
    } else if (kw == "primed") {
      top_level_only();
      arity(t, 1);
      circuit_.primed = count(t[1]);
    } else if (kw == "input") {
      top_level_only();
      require_header(t[0]);
      at_least(t, 2);
      const auto kind = circuits::source_kind_from_string(std::string(t[1].text));
      if (!kind) fail(t[1], "unknown source '" + std::string(t[1].text) + "'");
      circuits::Source src{*kind, {}, 0};
      std::size_t first = 2;
      if (*kind == circuits::SourceKind::QuadbitPlus) {
        const auto level = parse_int(t[2].text);
        if (!level || *level < 0 || *level > 3) fail(t[2], "quadbit level must be 0..3");
        src.level = static_cast<int>(*level);
        first = 3;
      }
      for (std::size_t i = first; i < t.size(); ++i) {
        const ModeToken m = mode(t[i], *kind == circuits::SourceKind::SinglePhotons, false);
        src.modes.push_back({m.spatial, m.pol});
      }
      const auto want = circuits::source_arity(*kind);
      if (want && src.modes.size() != *want)
        fail(t[1], "source " + std::string(t[1].text) + " takes " + std::to_string(*want) + " modes");
      if (src.modes.empty()) fail(t[1], "source without modes");
      circuit_.inputs.push_back(std::move(src));
    } else if (kw == "bs") {
      require_header(t[0]);
      arity(t, 3);
      const double r = real(t[1]);
      if (!(r >= 0.0 && r <= 1.0)) fail(t[1], "reflectivity must lie in [0, 1]");
      const auto m = modes(t, 2);
      push({optics::beam_splitter(r, m[0], m[1])});
    } else if (kw == "rot") {
      require_header(t[0]);
      arity(t, 2);
      push({optics::rotator(angle(t[1]), mode(t[2], false).spatial)});
    } else if (kw == "phase") {
      require_header(t[0]);
      arity(t, 2);
      const ModeToken m = mode(t[2], true);
      push({optics::phase(angle(t[1]), m.spatial, m.pol)});
    } else if (kw == "pbs" || kw == "qft" || kw == "iqft" || kw == "qf" || kw == "mqf") {
      require_header(t[0]);
      arity(t, 2);
      const auto m = modes(t, 1);
      if (kw == "pbs") push({optics::pbs(m[0], m[1])});
      if (kw == "qft") push({optics::quadbit_fourier(m[0], m[1])});
      if (kw == "iqft") push({optics::inverse_quadbit_fourier(m[0], m[1])});
      if (kw == "qf") push({circuits::KrausStep{circuits::KrausStep::Kind::QF, m[0], m[1]}});
      if (kw == "mqf") push({circuits::KrausStep{circuits::KrausStep::Kind::MQF, m[0], m[1]}});
    } else if (kw == "fourport") {
      require_header(t[0]);
      arity(t, 4);
      const auto m = modes(t, 1);
      push({optics::four_port(m[0], m[1], m[2], m[3])});
    } else if (kw == "detect") {
      require_header(t[0]);
      at_least(t, 2);
      detection::Resolving res;
      if (t[1].text == "number") {
        res = detection::Resolving::NumberOnly;
      } else if (t[1].text == "pol") {
        res = detection::Resolving::PolarizationResolving;
      } else {
        fail(t[1], "detector class must be 'number' or 'pol'");
      }
      auto m = modes(t, 2);
      blocks_.back().dead.insert(m.begin(), m.end());
      blocks_.back().arm_start = blocks_.back().dead;
      push({circuits::DetectStep{std::move(m), res, std::nullopt, {}}}, true);
    } else if (kw == "accept") {
      at_least(t, 1);
      auto& d = open_detect(t[0]);
      if (d.accept) fail(t[0], "detect already has an accept clause");
      if (!d.arms.empty()) fail(t[0], "accept must come before when blocks");
      std::string err;
      auto p = parse_predicate(join_tokens(t, 1), &err);
      if (!p) fail(t[1], err);
      check_literal_modes(*p, d, t[1]);
      d.accept = std::move(*p);
    } else if (kw == "when") {
      at_least(t, 1);
      auto& d = open_detect(t[0]);
      std::string err;
      auto lit = parse_literal(join_tokens(t, 1), &err);
      if (!lit) fail(t[1], err);
      check_literal_modes(detection::Predicate{std::vector<detection::PatternLiteral>{*lit}}, d, t[1]);
      d.arms.push_back({std::move(*lit), {}});
      const auto detect_index = *blocks_.back().open_detect;
      std::set<int> dead = blocks_.back().arm_start;
      blocks_.push_back({&d.arms.back().body, line_, std::move(dead), std::nullopt, {}});
      parent_detect_.push_back(detect_index);
    } else if (kw == "end") {
      arity(t, 0);
      if (blocks_.size() < 2) fail(t[0], "'end' without 'when'");
      std::set<int> dead = std::move(blocks_.back().dead);
      blocks_.pop_back();
      Block& parent = blocks_.back();
      parent.dead.insert(dead.begin(), dead.end());
      parent.open_detect = parent_detect_.back();
      parent_detect_.pop_back();
    } else if (kw == "postselect") {
      require_header(t[0]);
      at_least(t, 1);
      push({circuits::PostselectStep{modes(t, 1)}});
    } else if (kw == "mark") {
      at_least(t, 1);
      push({circuits::MarkStep{rest_of_line(line, t[0])}});
    } else if (kw == "stop") {
      arity(t, 0);
      push({circuits::StopStep{}});
    } else if (kw == "target") {
      top_level_only();
      require_header(t[0]);
      if (circuit_.target) fail(t[0], "target already set");
      circuit_.target = target(t);
    } else if (kw == "recycle") {
      top_level_only();
      require_header(t[0]);
      auto spec = target(t);
      if (spec.strict) fail(t.back(), "'strict' applies to targets only");
      circuit_.recycle.push_back(std::move(spec));
    } else if (kw == "split") {
      top_level_only();
      require_header(t[0]);
      at_least(t, 1);
      circuit_.split = modes(t, 1, false);
    } else {
      fail(t[0], "unknown statement '" + std::string(kw) + "'");
    }
  }

  static void check_literal_modes(const detection::Predicate& p, const circuits::DetectStep& d, const Token& at) {
    const auto* alts = std::get_if<std::vector<detection::PatternLiteral>>(&p.rule);
    if (!alts) return;
    for (const auto& lit : *alts)
      for (const auto& [m, spec] : lit.entries)
        if (std::find(d.modes.begin(), d.modes.end(), m) == d.modes.end())
          fail(at, "mode " + format_mode(m) + " is not measured by this detect");
  }

  Circuit circuit_;
  bool have_modes_ = false;
  std::vector<Block> blocks_;
  std::vector<std::size_t> parent_detect_;
  std::vector<Diagnostic> diagnostics_;
  int line_ = 1;
  int last_line_ = 1;
};

}  // namespace

ParseResult parse(std::string_view text) { return Parser().run(text); }

}  // namespace quadsim::dsl
