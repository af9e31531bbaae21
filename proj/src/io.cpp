#include "pbs/io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace pbs {

namespace {

struct Line {
  std::size_t number = 0;
  std::vector<std::string_view> words;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const auto end = text.find('\n');
    std::string_view raw = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);

    Line line{number, {}};
    std::size_t pos = 0;
    while (pos < raw.size()) {
      while (pos < raw.size() && (raw[pos] == ' ' || raw[pos] == '\t' || raw[pos] == '\r')) ++pos;
      std::size_t stop = pos;
      while (stop < raw.size() && raw[stop] != ' ' && raw[stop] != '\t' && raw[stop] != '\r') {
        ++stop;
      }
      if (stop > pos) line.words.push_back(raw.substr(pos, stop - pos));
      pos = stop;
    }
    if (!line.words.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

std::size_t parse_index(std::string_view word, std::size_t line) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc{} || ptr != word.data() + word.size()) {
    throw ParseError(line, "expected a nonnegative integer, got '" + std::string(word) + "'");
  }
  return value;
}

Rational parse_value(std::string_view word, std::size_t line) {
  try {
    return parse_rational(word);
  } catch (const std::invalid_argument& e) {
    throw ParseError(line, e.what());
  }
}

void expect_arity(const Line& line, std::size_t n) {
  if (line.words.size() != n) {
    throw ParseError(line.number, "'" + std::string(line.words[0]) + "' expects " +
                                      std::to_string(n - 1) + " argument(s)");
  }
}

void expect_header(const std::vector<Line>& lines, std::string_view magic) {
  if (lines.empty() || lines[0].words[0] != magic) {
    throw ParseError(lines.empty() ? 1 : lines[0].number,
                     "missing '" + std::string(magic) + " 1' header");
  }
  expect_arity(lines[0], 2);
  if (lines[0].words[1] != "1") {
    throw ParseError(lines[0].number, "unsupported format version '" +
                                          std::string(lines[0].words[1]) + "'");
  }
}

}  // namespace

PbsInstance parse_instance(std::string_view text) {
  const auto lines = tokenize(text);
  expect_header(lines, "pbs-instance");

  std::optional<std::size_t> n_sources, n_dests;
  std::optional<Rational> setup_cost;
  std::vector<Edge> edges;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen;

  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    const auto key = line.words[0];
    auto once = [&](auto& slot, auto value) {
      if (slot) throw ParseError(line.number, "duplicate '" + std::string(key) + "'");
      slot = value;
    };
    if (key == "n_sources") {
      expect_arity(line, 2);
      once(n_sources, parse_index(line.words[1], line.number));
    } else if (key == "n_dests") {
      expect_arity(line, 2);
      once(n_dests, parse_index(line.words[1], line.number));
    } else if (key == "setup_cost") {
      expect_arity(line, 2);
      const auto d = parse_value(line.words[1], line.number);
      if (sign(d) < 0) throw ParseError(line.number, "setup_cost must be nonnegative");
      once(setup_cost, d);
    } else if (key == "edge") {
      expect_arity(line, 4);
      Edge e{parse_index(line.words[1], line.number), parse_index(line.words[2], line.number),
             parse_value(line.words[3], line.number)};
      if (sign(e.weight) < 0) throw ParseError(line.number, "edge weight must be nonnegative");
      const auto [it, fresh] = seen.emplace(std::pair{e.source, e.dest}, line.number);
      if (!fresh) {
        throw ParseError(line.number, "parallel edge " + std::to_string(e.source) + ":" +
                                          std::to_string(e.dest) + " (first on line " +
                                          std::to_string(it->second) + ")");
      }
      if (n_sources && e.source >= *n_sources) {
        throw ParseError(line.number, "source index out of range");
      }
      if (n_dests && e.dest >= *n_dests) throw ParseError(line.number, "dest index out of range");
      edges.push_back(e);
    } else {
      throw ParseError(line.number, "unknown key '" + std::string(key) + "'");
    }
  }

  const std::size_t last = lines.back().number;
  if (!n_sources) throw ParseError(last, "missing n_sources");
  if (!n_dests) throw ParseError(last, "missing n_dests");
  if (!setup_cost) throw ParseError(last, "missing setup_cost");
  for (const auto& [pair, line] : seen) {
    if (pair.first >= *n_sources) throw ParseError(line, "source index out of range");
    if (pair.second >= *n_dests) throw ParseError(line, "dest index out of range");
  }
  return PbsInstance::create(*n_sources, *n_dests, std::move(edges), *setup_cost);
}

std::string write_instance(const PbsInstance& inst) {
  std::ostringstream out;
  out << "pbs-instance 1\n"
      << "n_sources " << inst.n_sources() << "\n"
      << "n_dests " << inst.n_dests() << "\n"
      << "setup_cost " << format_rational(inst.setup_cost()) << "\n";
  for (const auto& e : inst.edges()) {
    out << "edge " << e.source << " " << e.dest << " " << format_rational(e.weight) << "\n";
  }
  return out.str();
}

ScheduleFile parse_schedule(std::string_view text) {
  const auto lines = tokenize(text);
  expect_header(lines, "pbs-schedule");

  ScheduleFile file;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    const auto key = line.words[0];
    if (file.cost) throw ParseError(line.number, "content after the cost line");
    if (key == "algorithm") {
      expect_arity(line, 2);
      file.schedule.algorithm = std::string(line.words[1]);
    } else if (key == "round") {
      if (line.words.size() < 2) throw ParseError(line.number, "'round' needs a duration");
      Round round;
      round.duration = parse_value(line.words[1], line.number);
      std::vector<Pair> pairs;
      for (std::size_t w = 2; w < line.words.size(); ++w) {
        const auto word = line.words[w];
        const auto colon = word.find(':');
        if (colon == std::string_view::npos) {
          throw ParseError(line.number, "expected source:dest, got '" + std::string(word) + "'");
        }
        pairs.push_back({parse_index(word.substr(0, colon), line.number),
                         parse_index(word.substr(colon + 1), line.number)});
      }
      round.matching = Matching(std::move(pairs));
      file.schedule.rounds.push_back(std::move(round));
    } else if (key == "cost") {
      expect_arity(line, 2);
      file.cost = parse_value(line.words[1], line.number);
    } else {
      throw ParseError(line.number, "unknown key '" + std::string(key) + "'");
    }
  }
  return file;
}

std::string write_schedule(const Schedule& sched, const Rational& setup_cost) {
  std::ostringstream out;
  out << "pbs-schedule 1\n";
  out << "algorithm " << (sched.algorithm.empty() ? "unknown" : sched.algorithm) << "\n";
  for (const auto& round : sched.rounds) {
    out << "round " << format_rational(round.duration);
    for (const auto& p : round.matching.pairs()) out << " " << p.source << ":" << p.dest;
    out << "\n";
  }
  out << "cost " << format_rational(schedule_cost(sched, setup_cost)) << "\n";
  return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw InputError("failed writing '" + path.string() + "'");
}

}  // namespace pbs
