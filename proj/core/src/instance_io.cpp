// Copyright 2026 The phitsp Authors
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

#include "phitsp/instance_io.h"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "phitsp/errors.h"

namespace phitsp {
namespace {

struct Token {
  std::string_view text;
  int column;  // 1-based
};

struct Line {
  int number;
  std::vector<Token> tokens;
};

// Splits into non-empty lines of whitespace-separated tokens; ';' is always
// a token of its own and '#' ends the line.
std::vector<Line> Tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (size_t hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    Line line{number, {}};
    size_t i = 0;
    while (i < raw.size()) {
      char c = raw[i];
      if (c == ' ' || c == '\t' || c == '\r') {
        ++i;
      } else if (c == ';') {
        line.tokens.push_back({raw.substr(i, 1), static_cast<int>(i) + 1});
        ++i;
      } else {
        size_t start = i;
        while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' &&
               raw[i] != '\r' && raw[i] != ';') {
          ++i;
        }
        line.tokens.push_back(
            {raw.substr(start, i - start), static_cast<int>(start) + 1});
      }
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

int ParseInt(const Token& token, int line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.text.data(),
                                   token.text.data() + token.text.size(), value);
  if (ec != std::errc() || ptr != token.text.data() + token.text.size()) {
    throw ParseError(line, token.column,
                     "expected an integer, got '" + std::string(token.text) + "'");
  }
  return value;
}

int ParseVertex(const Token& token, int line, int n) {
  int v = ParseInt(token, line);
  if (v < 0 || v >= n) {
    throw ParseError(line, token.column,
                     "vertex " + std::to_string(v) + " out of range");
  }
  return v;
}

class Reader {
 public:
  explicit Reader(std::string_view text) : lines_(Tokenize(text)) {}

  const Line& Expect(std::string_view keyword) {
    if (next_ >= lines_.size()) {
      throw ParseError(last_line(), 1,
                       "expected '" + std::string(keyword) + "' line");
    }
    const Line& line = lines_[next_];
    if (line.tokens[0].text != keyword) {
      throw ParseError(line.number, line.tokens[0].column,
                       "expected '" + std::string(keyword) + "', got '" +
                           std::string(line.tokens[0].text) + "'");
    }
    ++next_;
    return line;
  }

  const Line* Peek() const {
    return next_ < lines_.size() ? &lines_[next_] : nullptr;
  }

  int last_line() const { return lines_.empty() ? 1 : lines_.back().number; }

 private:
  std::vector<Line> lines_;
  size_t next_ = 0;
};

void ExpectArity(const Line& line, size_t arity) {
  if (line.tokens.size() != arity + 1) {
    int column = line.tokens.size() > arity + 1
                     ? line.tokens[arity + 1].column
                     : line.tokens.back().column;
    throw ParseError(line.number, column,
                     "'" + std::string(line.tokens[0].text) + "' takes " +
                         std::to_string(arity) + " value(s)");
  }
}

VertexSet ParseVertexList(const Line& line, int n) {
  VertexSet set;
  for (size_t i = 1; i < line.tokens.size(); ++i) {
    int v = ParseVertex(line.tokens[i], line.number, n);
    if (set.contains(v)) {
      throw ParseError(line.number, line.tokens[i].column,
                       "vertex " + std::to_string(v) + " listed twice");
    }
    set.insert(v);
  }
  return set;
}

std::string JoinSet(const VertexSet& set) {
  std::string out;
  for (int v : set) out += ' ' + std::to_string(v);
  return out;
}

}  // namespace

PhiInstance ParseInstance(std::string_view text) {
  Reader reader(text);
  const Line& n_line = reader.Expect("n");
  ExpectArity(n_line, 1);
  const int n = ParseInt(n_line.tokens[1], n_line.number);
  if (n < 1 || n > kMaxVertices) {
    throw ParseError(n_line.number, n_line.tokens[1].column,
                     "vertex count must lie in [1, " +
                         std::to_string(kMaxVertices) + "]");
  }
  const Line& m_line = reader.Expect("m");
  ExpectArity(m_line, 1);
  const int m = ParseInt(m_line.tokens[1], m_line.number);
  if (m < 0) {
    throw ParseError(m_line.number, m_line.tokens[1].column,
                     "edge count must be non-negative");
  }

  std::vector<Edge> edges;
  std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
  for (int i = 0; i < m; ++i) {
    const Line& line = reader.Expect("e");
    ExpectArity(line, 3);
    int u = ParseVertex(line.tokens[1], line.number, n);
    int v = ParseVertex(line.tokens[2], line.number, n);
    if (u >= v) {
      throw ParseError(line.number, line.tokens[2].column,
                       "edge endpoints must satisfy u < v");
    }
    if (seen[u][v]) {
      throw ParseError(line.number, line.tokens[1].column,
                       "duplicate edge " + std::to_string(u) + " " +
                           std::to_string(v));
    }
    seen[u][v] = true;
    std::optional<Rational> length = ParseRational(line.tokens[3].text);
    if (!length || *length < 0) {
      throw ParseError(line.number, line.tokens[3].column,
                       "length must be a non-negative integer, decimal or p/q");
    }
    edges.push_back({u, v, *length});
  }
  if (const Line* extra = reader.Peek(); extra && extra->tokens[0].text == "e") {
    throw ParseError(extra->number, extra->tokens[0].column,
                     "more than " + std::to_string(m) + " edge lines");
  }

  const Line& i_line = reader.Expect("I");
  VertexSet interface_vertices = ParseVertexList(i_line, n);
  const Line& t_line = reader.Expect("T");
  VertexSet targets = ParseVertexList(t_line, n);
  for (size_t i = 1; i < t_line.tokens.size(); ++i) {
    int v = ParseInt(t_line.tokens[i], t_line.number);
    if (!interface_vertices.contains(v)) {
      throw ParseError(t_line.number, t_line.tokens[i].column,
                       "T vertex " + std::to_string(v) + " is not in I");
    }
  }
  if (targets.size() % 2 != 0) {
    throw ParseError(t_line.number, 1, "T must have even size");
  }

  const Line& c_line = reader.Expect("C");
  std::vector<VertexSet> parts;
  VertexSet covered;
  VertexSet current;
  auto close_part = [&](const Token& at) {
    if (current.empty()) {
      throw ParseError(c_line.number, at.column, "empty part in C");
    }
    parts.push_back(current);
    current = VertexSet();
  };
  for (size_t i = 1; i < c_line.tokens.size(); ++i) {
    const Token& token = c_line.tokens[i];
    if (token.text == ";") {
      close_part(token);
      continue;
    }
    int v = ParseVertex(token, c_line.number, n);
    if (!interface_vertices.contains(v)) {
      throw ParseError(c_line.number, token.column,
                       "C vertex " + std::to_string(v) + " is not in I");
    }
    if (covered.contains(v)) {
      throw ParseError(c_line.number, token.column,
                       "vertex " + std::to_string(v) + " appears in two parts");
    }
    covered.insert(v);
    current.insert(v);
  }
  if (c_line.tokens.size() > 1) close_part(c_line.tokens.back());
  if (covered != interface_vertices) {
    int missing = (interface_vertices - covered).min();
    throw ParseError(c_line.number, 1,
                     "C does not cover I vertex " + std::to_string(missing));
  }
  if (const Line* extra = reader.Peek()) {
    throw ParseError(extra->number, extra->tokens[0].column,
                     "unexpected '" + std::string(extra->tokens[0].text) + "'");
  }
  return PhiInstance(WeightedGraph(n, std::move(edges)),
                     Interface(interface_vertices, targets, std::move(parts)));
}

std::string WriteInstance(const PhiInstance& inst) {
  std::ostringstream out;
  const WeightedGraph& graph = inst.graph;
  out << "n " << graph.num_vertices() << '\n';
  out << "m " << graph.num_edges() << '\n';
  for (const Edge& e : graph.edges()) {
    out << "e " << e.u << ' ' << e.v << ' ' << FormatRational(e.length) << '\n';
  }
  out << 'I' << JoinSet(inst.phi.interface_vertices()) << '\n';
  out << 'T' << JoinSet(inst.phi.odd_targets()) << '\n';
  out << 'C';
  bool first = true;
  for (const VertexSet& part : inst.phi.parts()) {
    if (!first) out << " ;";
    out << JoinSet(part);
    first = false;
  }
  out << '\n';
  return out.str();
}

EdgeMultiSet ParseTour(std::string_view text, const WeightedGraph& graph) {
  EdgeMultiSet tour = EdgeMultiSet::Empty(graph);
  const int n = graph.num_vertices();
  for (const Line& line : Tokenize(text)) {
    if (line.tokens.size() != 3) {
      throw ParseError(line.number, line.tokens[0].column,
                       "tour lines read 'u v mult'");
    }
    int u = ParseVertex(line.tokens[0], line.number, n);
    int v = ParseVertex(line.tokens[1], line.number, n);
    int mult = ParseInt(line.tokens[2], line.number);
    std::optional<int> id = graph.FindEdge(u, v);
    if (!id) {
      throw ParseError(line.number, line.tokens[0].column,
                       "no edge " + std::to_string(u) + " " + std::to_string(v));
    }
    if (mult < 1) {
      throw ParseError(line.number, line.tokens[2].column,
                       "multiplicity must be positive");
    }
    if (tour.count(*id) > 0) {
      throw ParseError(line.number, line.tokens[0].column,
                       "edge " + std::to_string(u) + " " + std::to_string(v) +
                           " listed twice");
    }
    tour.Set(*id, mult);
  }
  return tour;
}

std::string WriteTour(const EdgeMultiSet& tour, const WeightedGraph& graph) {
  std::ostringstream out;
  for (int e : tour.Support()) {
    out << graph.edge(e).u << ' ' << graph.edge(e).v << ' ' << tour.count(e)
        << '\n';
  }
  return out.str();
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream contents;
  contents << in.rdbuf();
  return contents.str();
}

void WriteFile(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << contents;
  if (!out) throw Error("failed writing " + path);
}

}  // namespace phitsp
