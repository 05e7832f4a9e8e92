#include "backbone/io.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <sstream>
#include <vector>

namespace backbone {

namespace {

std::vector<std::string> tokens(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string w;
    while (words >> w) out.push_back(w);
  }
  return out;
}

std::uint64_t to_unsigned(const std::string& token, std::string_view what) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError("expected a non-negative integer for " + std::string(what) + ", got '" +
                     token + "'");
  }
  return value;
}

Vertex to_vertex(const std::string& token, std::string_view what) {
  const auto value = to_unsigned(token, what);
  if (value > std::numeric_limits<Vertex>::max()) {
    throw ParseError(std::string(what) + " " + token + " does not fit a vertex id");
  }
  return static_cast<Vertex>(value);
}

}  // namespace

LabeledTree parse_edge_list(std::istream& in) {
  const auto t = tokens(in);
  if (t.empty()) throw ParseError("empty edge list: expected the vertex count on the first line");
  const auto n = to_unsigned(t[0], "vertex count");
  if ((t.size() - 1) % 2 != 0) throw ParseError("edge list has a dangling endpoint");
  std::vector<Edge> edges;
  for (std::size_t i = 1; i + 1 < t.size(); i += 2) {
    edges.push_back({to_vertex(t[i], "endpoint"), to_vertex(t[i + 1], "endpoint")});
  }
  return tree_from_edges(n, edges);
}

LabeledTree parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

std::string format_edge_list(const LabeledTree& tree) {
  std::ostringstream out;
  out << tree.size() << '\n';
  for (const Edge& e : tree.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

PruferSequence parse_prufer(std::istream& in) {
  const auto t = tokens(in);
  if (t.empty()) throw ParseError("empty Prufer input: expected the vertex count first");
  PruferSequence code;
  code.n = to_unsigned(t[0], "vertex count");
  for (std::size_t i = 1; i < t.size(); ++i) code.seq.push_back(to_vertex(t[i], "Prufer entry"));
  const std::size_t expected = code.n >= 2 ? code.n - 2 : 0;
  if (code.n == 0 || code.seq.size() != expected) {
    throw ParseError("Prufer sequence for n = " + std::to_string(code.n) + " needs " +
                     std::to_string(expected) + " entries, got " + std::to_string(code.seq.size()));
  }
  return code;
}

PruferSequence parse_prufer(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_prufer(in);
}

std::string format_prufer(const PruferSequence& code) {
  std::ostringstream out;
  out << code.n << '\n';
  for (std::size_t i = 0; i < code.seq.size(); ++i) out << (i ? " " : "") << code.seq[i];
  out << '\n';
  return out.str();
}

std::string format_coloring_text(const Tricoloring& coloring) {
  std::ostringstream out;
  for (std::size_t i = 0; i < coloring.colors.size(); ++i) {
    out << i + 1 << ' ' << to_string(coloring.colors[i]) << '\n';
  }
  for (const Edge& e : coloring.red_edges) out << e.u << ' ' << e.v << " red\n";
  return out.str();
}

Tricoloring parse_coloring_text(std::string_view text) {
  Tricoloring out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream words(line);
    std::vector<std::string> w;
    std::string word;
    while (words >> word) w.push_back(word);
    if (w.empty()) continue;
    if (w.size() == 2) {
      const auto id = to_vertex(w[0], "vertex id");
      const auto color = parse_color(w[1]);
      if (!color) throw ParseError("unknown color '" + w[1] + "'");
      if (id != out.colors.size() + 1) throw ParseError("vertex lines must be listed as 1, 2, ..., n");
      out.colors.push_back(*color);
    } else if (w.size() == 3 && w[2] == "red") {
      out.red_edges.push_back(make_edge(to_vertex(w[0], "endpoint"), to_vertex(w[1], "endpoint")));
    } else {
      throw ParseError("unrecognized coloring line '" + line + "'");
    }
  }
  std::sort(out.red_edges.begin(), out.red_edges.end());
  return out;
}

nlohmann::json coloring_to_json(const Tricoloring& coloring) {
  nlohmann::json colors = nlohmann::json::array();
  for (const Color c : coloring.colors) colors.push_back(std::string(to_string(c)));
  nlohmann::json red = nlohmann::json::array();
  for (const Edge& e : coloring.red_edges) red.push_back({e.u, e.v});
  return {{"colors", colors}, {"red_edges", red}};
}

Tricoloring coloring_from_json(const nlohmann::json& j) {
  Tricoloring out;
  try {
    for (const auto& c : j.at("colors")) {
      const auto color = parse_color(c.get<std::string>());
      if (!color) throw ParseError("unknown color " + c.dump());
      out.colors.push_back(*color);
    }
    for (const auto& e : j.at("red_edges")) {
      out.red_edges.push_back(make_edge(e.at(0).get<Vertex>(), e.at(1).get<Vertex>()));
    }
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("malformed coloring JSON: ") + ex.what());
  }
  std::sort(out.red_edges.begin(), out.red_edges.end());
  return out;
}

namespace {

nlohmann::json edge_array(const std::vector<Edge>& edges) {
  nlohmann::json out = nlohmann::json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

std::string join(const std::vector<Vertex>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? "," : "") + std::to_string(vs[i]);
  return out;
}

std::string join(const std::vector<Edge>& es) {
  std::string out;
  for (std::size_t i = 0; i < es.size(); ++i) {
    out += (i ? " " : "") + std::to_string(es[i].u) + "-" + std::to_string(es[i].v);
  }
  return out;
}

}  // namespace

nlohmann::json backbone_to_json(const BackboneReport& r) {
  return {
      {"vertex_cover",
       {{"positive", r.vc_positive}, {"negative", r.vc_negative}, {"exclusive_edges", edge_array(r.exclusive_edges)}}},
      {"matching",
       {{"positive_edges", edge_array(r.mm_positive_edges)},
        {"optional", r.optional_vertices},
        {"unavoidable", r.unavoidable_vertices}}},
  };
}

std::string format_backbone_text(const BackboneReport& r) {
  std::ostringstream out;
  out << "vc_positive: " << join(r.vc_positive) << '\n'
      << "vc_negative: " << join(r.vc_negative) << '\n'
      << "exclusive_edges: " << join(r.exclusive_edges) << '\n'
      << "mm_positive_edges: " << join(r.mm_positive_edges) << '\n'
      << "optional: " << join(r.optional_vertices) << '\n'
      << "unavoidable: " << join(r.unavoidable_vertices) << '\n';
  return out.str();
}

nlohmann::json summary_to_json(const CountSummary& s) {
  return {
      {"vc_size", s.vc_size},   {"vc_count", to_decimal(s.vc_count)},
      {"mm_size", s.mm_size},   {"mm_count", to_decimal(s.mm_count)},
      {"n_brown", s.n_brown},   {"n_red", s.n_red},
      {"n_green", s.n_green},
  };
}

std::string totals_csv_header() { return "n,trees,brown,red,green,vc,mm"; }

std::string totals_csv_row(const EnumerationTotals& t) {
  return std::to_string(t.n) + "," + to_decimal(t.trees) + "," + to_decimal(t.total_brown) + "," +
         to_decimal(t.total_red) + "," + to_decimal(t.total_green) + "," +
         to_decimal(t.total_vc_count) + "," + to_decimal(t.total_mm_count);
}

nlohmann::json totals_to_json(const EnumerationTotals& t) {
  return {
      {"n", t.n},
      {"trees", to_decimal(t.trees)},
      {"brown", to_decimal(t.total_brown)},
      {"red", to_decimal(t.total_red)},
      {"green", to_decimal(t.total_green)},
      {"vc", to_decimal(t.total_vc_count)},
      {"mm", to_decimal(t.total_mm_count)},
  };
}

}  // namespace backbone
