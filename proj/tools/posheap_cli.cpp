// posheap: build, query, edit, verify and benchmark position-heap indexes.
#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "posheap/index_file.hpp"

using namespace posheap;
namespace fs = std::filesystem;

namespace {

enum Exit { kOk = 0, kNotFound = 1, kUsage = 2, kCorrupt = 3 };

std::string read_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Bytes are symbols. A final 0x00 is the terminator; otherwise a final '$'
// that occurs once is taken as it; otherwise one is appended.
TerminatedText load_text(const std::string& bytes, bool& dollar) {
  dollar = false;
  std::string_view body = bytes;
  if (!body.empty() && body.back() == '\0') body.remove_suffix(1);
  else if (!body.empty() && body.back() == '$' && std::count(body.begin(), body.end(), '$') == 1) {
    body.remove_suffix(1);
    dollar = true;
  }
  if (body.find('\0') != std::string_view::npos) throw ValidationError("input holds a 0x00 byte before the end");
  return TerminatedText::from_bytes(body);
}

std::vector<Symbol> to_pattern(const std::string& s, bool dollar) {
  return dollar ? pattern_from_display(s) : pattern_from_bytes(s);
}

std::string join(const std::vector<std::uint32_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
  return out;
}

int cmd_build(const std::string& input, const std::string& vname, std::size_t M, std::string output) {
  const auto v = parse_variant(vname);
  if (!v) throw UsageError("unknown variant " + vname);
  if (*v == Variant::kDynamic && M < 1) throw UsageError("--max-pattern must be at least 1 for the dynamic variant");
  bool dollar = false;
  const auto text = load_text(read_bytes(input), dollar);
  const auto x = Index::build(text, *v, M, dollar);
  if (output.empty()) output = input + ".phx";
  x.save_file(output);
  std::cout << "variant\t" << variant_name(*v) << "\n"
            << "n\t" << x.text_size() << "\n"
            << "height\t" << x.height() << "\n"
            << "nodes\t" << x.node_count() << "\n";
  if (*v == Variant::kDynamic) {
    auto& d = const_cast<Index&>(x).dynamic_index();
    std::cout << "s_prime_dividers\t" << d.s_prime_dividers() << "\n"
              << "s_double_prime_dividers\t" << d.s_double_prime_dividers() << "\n";
  }
  for (const auto& [tag, bytes] : x.section_sizes()) std::cout << "section\t" << tag << "\t" << bytes << "\n";
  std::cout << "output\t" << output << "\n";
  return kOk;
}

int cmd_query(const std::string& path, const std::string& pattern, bool count) {
  const auto x = Index::load_file(path);
  const auto p = to_pattern(pattern, x.dollar_terminator());
  const auto hits = x.query(p);
  if (count) std::cout << hits.size() << "\n";
  else std::cout << join(hits) << "\n";
  return hits.empty() ? kNotFound : kOk;
}

int cmd_edit(const std::string& path, const std::string& script, std::string output) {
  auto x = Index::load_file(path);
  auto& d = x.dynamic_index();
  const bool dollar = x.dollar_terminator();
  std::ifstream in(script);
  if (!in) throw std::runtime_error("cannot read " + script);
  std::string line;
  for (std::size_t no = 1; std::getline(in, line); ++no) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto bad = [&](const std::string& why) { return UsageError("script line " + std::to_string(no) + ": " + why); };
    if (line.size() < 3 || line[1] != ' ') throw bad("expected 'I <pos> <string>', 'D <pos> <len>' or 'Q <pattern>'");
    const char op = line[0];
    const std::string rest = line.substr(2);
    try {
      if (op == 'Q') {
        std::cout << join(d.search_limited(to_pattern(rest, dollar))) << "\n";
        continue;
      }
      const auto sp = rest.find(' ');
      const std::string num = rest.substr(0, sp);
      if (num.empty() || !std::all_of(num.begin(), num.end(), ::isdigit)) throw bad("bad position '" + num + "'");
      const auto pos = std::stoull(num);
      if (op == 'I') {
        if (sp == std::string::npos) throw bad("missing string");
        d.insert_substring(pos, to_pattern(rest.substr(sp + 1), dollar));
      } else if (op == 'D') {
        const std::string len = sp == std::string::npos ? "" : rest.substr(sp + 1);
        if (len.empty() || !std::all_of(len.begin(), len.end(), ::isdigit)) throw bad("bad length '" + len + "'");
        d.delete_substring(pos, std::stoull(len));
      } else {
        throw bad(std::string("unknown operation '") + op + "'");
      }
    } catch (const RangeError& e) {
      throw bad(e.what());
    } catch (const ValidationError& e) {
      throw bad(e.what());
    } catch (const UsageError& e) {
      if (std::string(e.what()).rfind("script line", 0) == 0) throw;
      throw bad(e.what());
    }
  }
  if (output.empty()) output = path;
  x.save_file(output);
  return kOk;
}

int cmd_verify(const std::string& path, const std::string& original) {
  const auto x = Index::load_file(path);
  const auto r = x.verify();
  if (!r.ok) {
    std::cout << "FAIL\t" << r.invariant << "\t" << r.detail << "\n";
    return kNotFound;
  }
  if (!original.empty()) {
    bool dollar = false;
    const auto t = load_text(read_bytes(original), dollar);
    if (!std::ranges::equal(t.symbols(), x.text().symbols())) {
      std::cout << "FAIL\ttext\tindex text differs from " << original << "\n";
      return kNotFound;
    }
  }
  std::cout << "ok\t" << variant_name(x.variant()) << "\tn=" << x.text_size() << "\n";
  return kOk;
}

int cmd_bench(const std::string& dir, const std::vector<std::size_t>& sizes, std::size_t M, std::size_t queries) {
  std::vector<fs::path> files;
  if (fs::is_directory(dir)) {
    for (const auto& e : fs::directory_iterator(dir)) {
      if (e.is_regular_file()) files.push_back(e.path());
    }
  } else {
    throw std::runtime_error("not a directory: " + dir);
  }
  std::sort(files.begin(), files.end());
  using clock = std::chrono::steady_clock;
  std::cout << "corpus\tvariant\tn\tsigma\tbuild_ms\tquery_us\tbuild_ratio\n";
  for (const auto& f : files) {
    const auto bytes = read_bytes(f.string());
    for (auto v : {Variant::kHeap, Variant::kBridge, Variant::kSimulated, Variant::kSuffixHeap, Variant::kDynamic}) {
      double prev_ms = 0;
      std::size_t prev_n = 0;
      for (std::size_t n : sizes) {
        if (n == 0 || n > bytes.size()) continue;
        bool dollar = false;
        std::string body = bytes.substr(0, n);
        std::replace(body.begin(), body.end(), '\0', '\1');
        const auto text = load_text(body, dollar);
        const auto t0 = clock::now();
        const auto x = Index::build(text, v, M, dollar);
        const double ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
        std::mt19937_64 rng(n);
        const std::size_t m = std::min<std::size_t>(v == Variant::kDynamic ? M : 8, text.size() - 1);
        double us = 0;
        if (m > 0) {
          std::vector<std::vector<Symbol>> pats;
          for (std::size_t q = 0; q < queries; ++q) {
            const std::size_t at = rng() % (text.size() - m);
            pats.emplace_back(text.symbols().begin() + static_cast<long>(at),
                              text.symbols().begin() + static_cast<long>(at + m));
          }
          const auto q0 = clock::now();
          std::size_t sink = 0;
          for (const auto& p : pats) sink += x.query(p).size();
          us = std::chrono::duration<double, std::micro>(clock::now() - q0).count() / double(pats.size());
          if (sink == 0) std::cerr << "warning: no hits\n";
        }
        std::cout << f.filename().string() << "\t" << variant_name(v) << "\t" << text.size() << "\t"
                  << text.alphabet_size() << "\t" << ms << "\t" << us << "\t";
        if (prev_n) std::cout << ms / prev_ms;
        else std::cout << "-";
        std::cout << "\n";
        prev_ms = ms;
        prev_n = n;
      }
    }
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"position heap indexes"};
  app.require_subcommand(1);

  std::string input, output, vname = "heap", index, pattern, script, original, corpus;
  std::size_t M = 0, queries = 200;
  bool count = false, list = false;
  std::vector<std::size_t> sizes;

  auto* build = app.add_subcommand("build", "build an index from a text file");
  build->add_option("input", input, "text file")->required();
  build->add_option("--variant", vname, "heap, bridge, simulated, sheap or dynamic");
  build->add_option("--max-pattern", M, "longest pattern (dynamic variant)");
  build->add_option("--output,-o", output, "index file (default: <input>.phx)");

  auto* query = app.add_subcommand("query", "search an index");
  query->add_option("index", index)->required();
  query->add_option("pattern", pattern)->required();
  auto* count_flag = query->add_flag("--count", count, "print the number of occurrences");
  query->add_flag("--list", list, "print the positions (default)")->excludes(count_flag);

  auto* edit = app.add_subcommand("edit", "apply an edit script to a dynamic index");
  edit->add_option("index", index)->required();
  edit->add_option("--script", script)->required();
  edit->add_option("--output,-o", output, "write here instead of overwriting");

  auto* verify = app.add_subcommand("verify", "check an index's invariants");
  verify->add_option("index", index)->required();
  verify->add_option("original", original, "text file the index should hold");

  auto* bench = app.add_subcommand("bench", "time builds and queries, TSV on stdout");
  bench->add_option("corpus", corpus, "directory of text files")->required();
  bench->add_option("--sizes", sizes, "prefix lengths")->delimiter(',')->required();
  bench->add_option("--max-pattern", M, "M for the dynamic variant")->default_val(8);
  bench->add_option("--queries", queries)->default_val(200);
  bench->add_flag("--tsv", "output is always TSV; accepted for scripts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*build) return cmd_build(input, vname, M, output);
    if (*query) return cmd_query(index, pattern, count);
    if (*edit) return cmd_edit(index, script, output);
    if (*verify) return cmd_verify(index, original);
    if (*bench) return cmd_bench(corpus, sizes, M, queries);
  } catch (const CorruptionError& e) {
    std::cerr << "corrupt index: " << e.what() << "\n";
    return kCorrupt;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "out of range: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
