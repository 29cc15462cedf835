#ifndef COLPART_IO_HPP_
#define COLPART_IO_HPP_

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "colpart/category.hpp"
#include "colpart/errors.hpp"
#include "colpart/partition.hpp"

namespace colpart {

/// Explicit form without the word-notation alphabet limit:
/// {"colors":"wbw","blocks":[[1,3],[2]]}, positions 1-based, blocks in
/// order of their smallest point.
inline std::string to_explicit(Partition const& p) {
  std::string colors;
  for (auto c : p.colors()) {
    colors += c == Color::white ? 'w' : 'b';
  }
  nlohmann::json blocks = nlohmann::json::array();
  for (auto const& b : p.blocks()) {
    nlohmann::json block = nlohmann::json::array();
    for (auto i : b) {
      block.push_back(i + 1);
    }
    blocks.push_back(std::move(block));
  }
  nlohmann::ordered_json out;
  out["colors"] = colors;
  out["blocks"] = std::move(blocks);
  return out.dump();
}

inline Partition from_explicit(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (nlohmann::json::parse_error const& e) {
    throw ParseError(std::string("explicit form: ") + e.what(), e.byte);
  }
  if (!j.is_object() || !j.contains("colors") || !j["colors"].is_string() ||
      !j.contains("blocks") || !j["blocks"].is_array()) {
    throw ParseError(
        "explicit form needs a \"colors\" string and a \"blocks\" array", 0);
  }
  auto const colors_text = j["colors"].get<std::string>();
  std::size_t const k = colors_text.size();
  std::vector<Color> colors(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (colors_text[i] == 'w') {
      colors[i] = Color::white;
    } else if (colors_text[i] == 'b') {
      colors[i] = Color::black;
    } else {
      throw ParseError("explicit form: color must be 'w' or 'b'", i);
    }
  }
  constexpr auto unset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> labels(k, unset);
  std::uint32_t label = 0;
  for (auto const& block : j["blocks"]) {
    if (!block.is_array() || block.empty()) {
      throw ParseError("explicit form: each block must be a nonempty array", 0);
    }
    for (auto const& pos : block) {
      if (!pos.is_number_integer() || pos.get<long long>() < 1 ||
          pos.get<long long>() > static_cast<long long>(k)) {
        throw ParseError("explicit form: block entries must lie in 1.." +
                             std::to_string(k),
                         0);
      }
      auto const i = static_cast<std::size_t>(pos.get<long long>() - 1);
      if (labels[i] != unset) {
        throw ParseError("explicit form: point " + std::to_string(i + 1) +
                             " appears in two blocks",
                         0);
      }
      labels[i] = label;
    }
    ++label;
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (labels[i] == unset) {
      throw ParseError("explicit form: point " + std::to_string(i + 1) +
                           " is in no block",
                       0);
    }
  }
  return Partition(std::move(colors), std::move(labels));
}

/// A word, or the explicit form when the text starts with '{'.
inline Partition parse_any(std::string_view text) {
  if (!text.empty() && text.front() == '{') {
    return from_explicit(text);
  }
  return parse(text);
}

/// The word when it fits the alphabet, else the explicit form.
inline std::string render_any(Partition const& p) {
  return p.block_count() <= word_alphabet_size ? render(p) : to_explicit(p);
}

namespace detail {
inline std::string_view trim(std::string_view s) {
  auto const first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) {
    return {};
  }
  auto const last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}
}  // namespace detail

/// One partition per line; blank lines and lines starting with '#' are
/// skipped. Errors name the 1-based line.
inline std::vector<Partition> parse_generator_text(std::string_view text) {
  std::vector<Partition> out;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    ++line_no;
    auto const line = detail::trim(text.substr(start, end - start));
    if (!line.empty() && line.front() != '#') {
      try {
        out.push_back(parse_any(line));
      } catch (ParseError const& e) {
        throw ParseError("line " + std::to_string(line_no) + ": " + e.what(),
                         e.position());
      }
    }
    start = end + 1;
  }
  return out;
}

inline std::string read_text_file(std::filesystem::path const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot read " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_text_file(std::filesystem::path const& path,
                            std::string const& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << text)) {
    throw IoError("cannot write " + path.string());
  }
}

inline std::vector<Partition> read_generator_file(
    std::filesystem::path const& path) {
  return parse_generator_text(read_text_file(path));
}

/// Canonical words of the nonempty elements of length at most L, sorted
/// bytewise.
inline std::vector<std::string> listing(BoundedCategory const& cat) {
  std::vector<std::string> out;
  for (auto const& p : cat.reported_elements()) {
    if (!p.empty()) {
      out.push_back(render_any(p));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// 64-bit FNV-1a over the closure inputs, as 16 hex digits. Generators are
/// rendered explicitly and sorted, so file order and duplicates do not
/// matter.
inline std::string closure_cache_key(std::vector<Partition> const& generators,
                                     std::size_t bound,
                                     std::size_t working_bound,
                                     ClosureOptions const& options = {}) {
  std::vector<std::string> gens;
  for (auto const& g : generators) {
    gens.push_back(to_explicit(g));
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::string text = "colpart-closure-v1\nL=" + std::to_string(bound) +
                     "\nL'=" + std::to_string(working_bound) +
                     "\norbits=" + (options.color_orbits ? "1" : "0") + "\n";
  for (auto const& g : gens) {
    text += g + "\n";
  }
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(h));
  return hex;
}

inline std::string join_lines(std::vector<std::string> const& lines) {
  std::string out;
  for (auto const& l : lines) {
    out += l + "\n";
  }
  return out;
}

inline std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    out.emplace_back(text.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

/// The listing of the closure, read from `cache_dir` when a file with the
/// matching key exists and computed and stored there otherwise. With an
/// empty `cache_dir` nothing is cached.
inline std::vector<std::string> cached_listing(
    std::filesystem::path const& cache_dir,
    std::vector<Partition> const& generators, std::size_t bound,
    std::size_t working_bound, ClosureOptions const& options = {},
    bool* hit = nullptr) {
  if (hit != nullptr) {
    *hit = false;
  }
  std::filesystem::path file;
  if (!cache_dir.empty()) {
    file = cache_dir /
           (closure_cache_key(generators, bound, working_bound, options) +
            ".txt");
    if (std::filesystem::exists(file)) {
      if (hit != nullptr) {
        *hit = true;
      }
      return split_lines(read_text_file(file));
    }
  }
  auto const lines = listing(
      generate_closure(generators, bound, working_bound, options));
  if (!cache_dir.empty()) {
    std::filesystem::create_directories(cache_dir);
    write_text_file(file, join_lines(lines));
  }
  return lines;
}

}  // namespace colpart

#endif  // COLPART_IO_HPP_
