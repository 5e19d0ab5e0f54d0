// Copyright 2026 The steiner_gap Authors
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


#include "steiner_gap/stp_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace steiner_gap {

namespace {

constexpr const char* kMagic = "33D32945 STP File, STP Format Version 1.0";

std::string lower(std::string text) {
  std::transform(text.begin(), text.end(), text.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return text;
}

std::string trim(std::string_view text) {
  size_t begin = 0;
  size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  return std::string(text.substr(begin, end - begin));
}

std::string escape_name(const std::string& name) {
  std::string out;
  for (char c : name) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out;
}

std::string unescape_name(std::string_view quoted, int line) {
  if (quoted.size() < 2 || quoted.front() != '"' || quoted.back() != '"') {
    throw StpParseError(line, "name must be quoted");
  }
  std::string out;
  for (size_t i = 1; i + 1 < quoted.size(); ++i) {
    char c = quoted[i];
    if (c == '\\' && i + 2 < quoted.size()) {
      char next = quoted[++i];
      out += next == 'n' ? '\n' : next;
      continue;
    }
    out += c;
  }
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) {
    std::string line;
    std::istringstream in{std::string(text)};
    while (std::getline(in, line)) lines_.push_back(line);
  }

  SteinerInstance parse() {
    size_t i = 0;
    skip_blank(i);
    if (i >= lines_.size() || lower(trim(lines_[i])).rfind("33d32945", 0) != 0) {
      throw StpParseError(static_cast<int>(i) + 1, "missing STP header line");
    }
    ++i;
    bool done = false;
    while (!done) {
      skip_blank(i);
      if (i >= lines_.size()) throw StpParseError(static_cast<int>(i), "missing EOF marker");
      std::istringstream words(lines_[i]);
      std::string head, section;
      words >> head;
      if (lower(head) == "eof") {
        done = true;
        break;
      }
      if (lower(head) != "section") throw StpParseError(static_cast<int>(i) + 1, "expected SECTION");
      words >> section;
      ++i;
      const std::string which = lower(section);
      if (which == "comment") {
        i = parse_comment(i);
      } else if (which == "graph") {
        i = parse_graph(i);
      } else if (which == "terminals") {
        i = parse_terminals(i);
      } else {
        i = skip_section(i);
      }
    }
    if (!nodes_) throw StpParseError(0, "missing SECTION Graph");
    if (edges_declared_ && *edges_declared_ != graph_.num_edges()) {
      throw StpParseError(0, "edge count does not match the Edges line");
    }
    if (terminals_declared_ && *terminals_declared_ != static_cast<int>(terminals_.size())) {
      throw StpParseError(0, "terminal count does not match the Terminals line");
    }
    return make_instance(std::move(graph_), std::move(terminals_), name_);
  }

 private:
  void skip_blank(size_t& i) const {
    while (i < lines_.size()) {
      std::string t = trim(lines_[i]);
      if (!t.empty() && t[0] != '#') return;
      ++i;
    }
  }

  size_t skip_section(size_t i) const {
    for (; i < lines_.size(); ++i) {
      if (lower(trim(lines_[i])) == "end") return i + 1;
    }
    throw StpParseError(static_cast<int>(i), "unterminated section");
  }

  size_t parse_comment(size_t i) {
    for (; i < lines_.size(); ++i) {
      std::string t = trim(lines_[i]);
      if (lower(t) == "end") return i + 1;
      std::istringstream words(t);
      std::string key;
      words >> key;
      if (lower(key) == "name") name_ = unescape_name(trim(t.substr(key.size())), static_cast<int>(i) + 1);
    }
    throw StpParseError(static_cast<int>(i), "unterminated comment section");
  }

  VertexId vertex(const std::string& token, int line) const {
    long long v = 0;
    try {
      size_t used = 0;
      v = std::stoll(token, &used);
      if (used != token.size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw StpParseError(line, "bad vertex '" + token + "'");
    }
    if (!nodes_ || v < 1 || v > *nodes_) throw StpParseError(line, "vertex " + token + " out of range");
    return static_cast<VertexId>(v - 1);
  }

  Rational number(const std::string& token, int line) const {
    try {
      return Rational::parse(token);
    } catch (const std::invalid_argument&) {
      throw StpParseError(line, "bad number '" + token + "'");
    }
  }

  size_t parse_graph(size_t i) {
    for (; i < lines_.size(); ++i) {
      const int line = static_cast<int>(i) + 1;
      std::string t = trim(lines_[i]);
      if (t.empty() || t[0] == '#') continue;
      std::istringstream words(t);
      std::vector<std::string> tok;
      for (std::string w; words >> w;) tok.push_back(w);
      const std::string key = lower(tok[0]);
      if (key == "end") return i + 1;
      if (key == "nodes" || key == "edges" || key == "arcs") {
        if (tok.size() != 2) throw StpParseError(line, "expected a count");
        int count = static_cast<int>(number(tok[1], line).to_double());
        if (count < 0) throw StpParseError(line, "negative count");
        if (key == "nodes") {
          if (nodes_) throw StpParseError(line, "duplicate Nodes line");
          nodes_ = count;
          graph_ = Graph(count);
        } else if (key == "edges") {
          edges_declared_ = count;
        } else {
          throw StpParseError(line, "directed instances are not supported");
        }
        continue;
      }
      if (key == "e" || key == "er") {
        if (!nodes_) throw StpParseError(line, "edge before Nodes line");
        size_t want = key == "e" ? 4 : 5;
        if (tok.size() != want) throw StpParseError(line, "malformed edge line");
        VertexId a = vertex(tok[1], line);
        VertexId b = vertex(tok[2], line);
        if (a == b) throw StpParseError(line, "self loop");
        Rational cost = number(tok[3], line);
        if (key == "er") {
          Rational den = number(tok[4], line);
          if (den.sign() <= 0) throw StpParseError(line, "nonpositive denominator");
          cost /= den;
        }
        if (cost.sign() < 0) throw StpParseError(line, "negative cost");
        if (graph_.find_edge(a, b)) throw StpParseError(line, "parallel edge");
        graph_.add_edge(a, b, cost);
        continue;
      }
      throw StpParseError(line, "unknown graph line '" + tok[0] + "'");
    }
    throw StpParseError(static_cast<int>(i), "unterminated graph section");
  }

  size_t parse_terminals(size_t i) {
    for (; i < lines_.size(); ++i) {
      const int line = static_cast<int>(i) + 1;
      std::string t = trim(lines_[i]);
      if (t.empty() || t[0] == '#') continue;
      std::istringstream words(t);
      std::vector<std::string> tok;
      for (std::string w; words >> w;) tok.push_back(w);
      const std::string key = lower(tok[0]);
      if (key == "end") return i + 1;
      if (key == "terminals") {
        if (tok.size() != 2) throw StpParseError(line, "expected a count");
        terminals_declared_ = static_cast<int>(number(tok[1], line).to_double());
        continue;
      }
      if (key == "t") {
        if (tok.size() != 2) throw StpParseError(line, "malformed terminal line");
        VertexId v = vertex(tok[1], line);
        if (std::find(terminals_.begin(), terminals_.end(), v) != terminals_.end()) {
          throw StpParseError(line, "duplicate terminal");
        }
        terminals_.push_back(v);
        continue;
      }
      if (key == "root") continue;
      throw StpParseError(line, "unknown terminal line '" + tok[0] + "'");
    }
    throw StpParseError(static_cast<int>(i), "unterminated terminal section");
  }

  std::vector<std::string> lines_;
  std::optional<int> nodes_;
  std::optional<int> edges_declared_;
  std::optional<int> terminals_declared_;
  Graph graph_;
  std::vector<VertexId> terminals_;
  std::string name_;
};

}  // namespace

StpParseError::StpParseError(int line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

std::string write_stp(const SteinerInstance& inst) {
  const Graph& g = inst.graph;
  std::ostringstream out;
  out << kMagic << "\n\nSECTION Comment\nName \"" << escape_name(inst.name) << "\"\nEND\n\n";
  out << "SECTION Graph\nNodes " << g.num_vertices() << "\nEdges " << g.num_edges() << "\n";
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& edge = g.edge(e);
    const Rational& c = g.cost(e);
    if (c.is_integer()) {
      out << "E " << edge.u + 1 << " " << edge.v + 1 << " " << c.to_string() << "\n";
    } else {
      out << "ER " << edge.u + 1 << " " << edge.v + 1 << " " << c.numerator().get_str() << " "
          << c.denominator().get_str() << "\n";
    }
  }
  out << "END\n\nSECTION Terminals\nTerminals " << inst.required.size() << "\n";
  for (VertexId r : inst.required) out << "T " << r + 1 << "\n";
  out << "END\n\nEOF\n";
  return out.str();
}

SteinerInstance read_stp(std::string_view text) { return Parser(text).parse(); }

void write_stp_file(const SteinerInstance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << write_stp(inst);
  if (!out) throw std::runtime_error("write failed for " + path);
}

SteinerInstance read_stp_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return read_stp(buffer.str());
}

}  // namespace steiner_gap
