#pragma once

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "maxcross/maxcross.hpp"

namespace maxcross::cli {

enum ExitCode : int { kOk = 0, kArgument = 2, kDegenerate = 3 };

namespace detail {

inline io::DrawingFile load_drawing(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw ArgumentError("cannot open " + path);
  return io::read_drawing(is);
}

inline void save_text(const std::string& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw ArgumentError("cannot write " + path);
  os << text;
  if (!os) throw ArgumentError("write failed for " + path);
}

inline void print_edges(std::ostream& out, const char* key, std::span<const Edge> edges) {
  out << key;
  for (const Edge& e : edges) out << ' ' << e.u << ' ' << e.v;
  out << '\n';
}

struct ConstructionTag {
  std::string kind;
  int n = 0;
  int d = 0;
};

// "# construction star 10 7" / "# construction starlike 8 4 case even"
inline std::optional<ConstructionTag> find_construction_tag(const std::vector<std::string>& comments) {
  for (const std::string& line : comments) {
    std::istringstream ls(line);
    std::string hash, word;
    ConstructionTag tag;
    if (ls >> hash >> word >> tag.kind >> tag.n >> tag.d && hash == "#" && word == "construction") return tag;
  }
  return std::nullopt;
}

}  // namespace detail

/// Command-line entry point; returns the process exit status.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Maximum rectilinear crossing numbers of d-regular graphs", "maxcross"};
  app.require_subcommand(1);

  // construct
  auto* construct = app.add_subcommand("construct", "Build an extremal convex drawing");
  std::string kind;
  int c_n = 0, c_d = 0;
  std::string c_out;
  construct->add_option("kind", kind, "star | starlike")->required()->check(CLI::IsMember({"star", "starlike"}));
  construct->add_option("--n", c_n, "order")->required();
  construct->add_option("--d", c_d, "degree")->required();
  construct->add_option("-o,--output", c_out, "drawing file (default: stdout)");

  // count
  auto* count = app.add_subcommand("count", "Count crossings of a drawing file");
  std::string count_file;
  bool per_edge = false;
  count->add_option("file", count_file, "drawing v1 file")->required();
  count->add_flag("--per-edge", per_edge, "also list crossings per edge");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Endvertex and edge type statistics of a drawing");
  std::string analyze_file;
  bool check_lemma = false;
  analyze->add_option("file", analyze_file, "drawing v1 file")->required();
  analyze->add_flag("--check-lemma", check_lemma, "check per-vertex type coverage");

  // formula
  auto* formula = app.add_subcommand("formula", "Closed-form bounds for R(n,d)");
  int f_n = 0, f_d = 0;
  formula->add_option("--n", f_n, "order")->required();
  formula->add_option("--d", f_d, "degree")->required();

  // search
  auto* search = app.add_subcommand("search", "Exhaustive convex search or random perturbation probe");
  int s_n = 0, s_d = 0, workers = 1;
  std::string mode = "convex";
  std::int64_t trials = 1000;
  std::uint64_t seed = 1;
  bool long_run = false;
  std::string checkpoint_dir, s_out;
  search->add_option("--n", s_n, "order")->required();
  search->add_option("--d", s_d, "degree")->required();
  search->add_option("--mode", mode, "convex | probe")->check(CLI::IsMember({"convex", "probe"}));
  search->add_option("--trials", trials, "probe trials");
  search->add_option("--seed", seed, "probe seed");
  search->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
  search->add_flag("--long-run", long_run, "allow n = 10 convex search");
  search->add_option("--checkpoint-dir", checkpoint_dir, "write/resume shard-<id>.ckpt files");
  search->add_option("-o,--output", s_out, "write the witness (graph file, or drawing file for probe)");

  // table
  auto* table = app.add_subcommand("table", "Reproduce the table of values");
  int max_n = 0, oracle_max_n = 8, t_workers = 1;
  std::string format = "text";
  table->add_option("--max-n", max_n, "largest order")->required();
  table->add_option("--format", format, "text | csv")->check(CLI::IsMember({"text", "csv"}));
  table->add_option("--oracle-max-n", oracle_max_n, "run the convex search up to this order");
  table->add_option("--workers", t_workers, "worker threads")->check(CLI::PositiveNumber);

  // render
  auto* render = app.add_subcommand("render", "Render a drawing file as SVG");
  std::string render_file, render_out;
  bool circle_layout = false, show_removed = false;
  double scale = 0.0;
  render->add_option("file", render_file, "drawing v1 file")->required();
  render->add_option("-o,--output", render_out, "SVG file")->required();
  render->add_flag("--circle-layout", circle_layout, "place convex drawings on a regular polygon");
  render->add_flag("--show-removed", show_removed, "dash the edges a star-like construction removed");
  render->add_option("--scale", scale, "pixels per unit");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return kArgument;
  }

  try {
    if (*construct) {
      std::vector<std::string> trailer;
      std::optional<GeometricDrawing> drawing;
      if (kind == "star") {
        drawing = generalized_star(c_n, c_d);
        trailer.push_back("construction star " + std::to_string(c_n) + " " + std::to_string(c_d));
      } else {
        StarLikeConstruction built = star_like_construction(c_n, c_d);
        trailer.push_back("construction starlike " + std::to_string(c_n) + " " + std::to_string(c_d) + " case " +
                          (built.params.odd_cycles() ? "odd" : "even"));
        drawing = std::move(built.drawing);
      }
      std::string text = io::to_drawing_text(*drawing, trailer);
      if (c_out.empty())
        out << text;
      else
        detail::save_text(c_out, text);
    } else if (*count) {
      io::DrawingFile file = detail::load_drawing(count_file);
      CrossingReport report = count_crossings_geometric(file.drawing);
      out << "crossings " << report.total << '\n';
      out << "noncrossing " << report.noncrossing << '\n';
      out << "nonadjacent_pairs " << report.nonadjacent_pairs << '\n';
      if (per_edge) {
        auto edges = file.drawing.graph.edges();
        for (std::size_t i = 0; i < edges.size(); ++i)
          out << "edge " << edges[i].u << ' ' << edges[i].v << ' ' << report.per_edge[i] << '\n';
      }
    } else if (*analyze) {
      io::DrawingFile file = detail::load_drawing(analyze_file);
      const GeometricDrawing& drawing = file.drawing;
      TypeProfile profile = type_profile(drawing);
      NoncrossingAccounting acc = noncrossing_accounting(drawing, profile);
      out << "n " << drawing.graph.order() << '\n';
      out << "d " << profile.d << '\n';
      out << "D " << profile.max_type << '\n';
      out << "y";
      for (auto v : profile.y) out << ' ' << v;
      out << '\n';
      for (int i = 0; i <= profile.max_type; ++i)
        for (int j = i; j <= profile.max_type; ++j)
          out << "x_" << i << '_' << j << ' '
              << profile.x[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] << '\n';
      out << "M " << acc.accounting << '\n';
      out << "N " << acc.noncrossing << '\n';
      out << "P " << acc.nonadjacent_pairs << '\n';
      out << "crossings " << acc.crossings << '\n';
      out << "crossings_eq_P_minus_N " << (acc.crossings_is_p_minus_n ? "true" : "false") << '\n';
      out << "N_ge_half_M " << (acc.n_at_least_half_m ? "true" : "false") << '\n';
      for (const VertexGroup& g : profile.groups) {
        out << "group_" << g.s << '_' << g.t << " count " << g.count << " types";
        for (int t : g.signature) out << ' ' << t;
        out << '\n';
      }
      if (check_lemma) out << "lemma " << lemma_coverage_check(profile).describe() << '\n';
    } else if (*formula) {
      BoundReport r = best_known(f_n, f_d);
      out << "n " << r.n << '\n' << "d " << r.d << '\n';
      out << "lower " << r.lower << '\n' << "upper " << r.upper << '\n';
      out << "exact " << (r.exact ? "true" : "false") << '\n';
      out << "conjectured " << (r.conjectured ? "true" : "false") << '\n';
      out << "provenance";
      for (const auto& p : r.provenance) out << ' ' << p;
      out << '\n';
      out << "thrackle_upper " << thrackle_upper(f_n, f_d) << '\n';
      out << "min_noncrossing_pairs " << min_noncrossing_pairs(f_n, f_d) << '\n';
    } else if (*search) {
      SearchResult result;
      if (mode == "convex") {
        SearchOptions options;
        options.workers = workers;
        options.long_run = long_run;
        if (!checkpoint_dir.empty()) options.checkpoint_dir = checkpoint_dir;
        result = convex_max(s_n, s_d, options);
      } else {
        result = perturbation_probe(s_n, s_d, trials, seed);
      }
      out << "mode " << to_string(result.mode) << '\n';
      out << "n " << result.n << '\n' << "d " << result.d << '\n';
      out << "max_crossings " << result.max_crossings << '\n';
      out << "graphs_examined " << result.graphs_examined << '\n';
      if (result.witness) detail::print_edges(out, "witness", result.witness->edges());
      err << "elapsed_ms " << std::chrono::duration_cast<std::chrono::milliseconds>(result.elapsed).count() << '\n';
      if (!s_out.empty() && result.witness) {
        if (result.witness_drawing)
          detail::save_text(s_out, io::to_drawing_text(*result.witness_drawing));
        else
          detail::save_text(s_out, io::to_graph_text(*result.witness));
      }
    } else if (*table) {
      TableOptions options;
      options.oracle_max_n = oracle_max_n;
      options.workers = t_workers;
      auto cells = reproduce_table(max_n, options);
      if (format == "csv")
        write_table_csv(out, cells);
      else
        write_table_text(out, cells);
    } else if (*render) {
      io::DrawingFile file = detail::load_drawing(render_file);
      RenderStyle style;
      style.scale = scale;
      style.circle_layout = circle_layout;
      if (show_removed) {
        auto tag = detail::find_construction_tag(file.comments);
        if (!tag || tag->kind != "starlike")
          throw ArgumentError("--show-removed needs a '# construction starlike' trailer");
        StarLikeConstruction built = star_like_construction(tag->n, tag->d);
        if (!(built.drawing == file.drawing))
          throw ArgumentError("drawing does not match its construction trailer");
        style.highlight = built.removed;
      }
      detail::save_text(render_out, render_svg(file.drawing, style));
    }
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return kArgument;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kArgument;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kArgument;
  } catch (const DegeneracyError& e) {
    err << "degenerate drawing: " << e.what() << '\n';
    return kDegenerate;
  } catch (const ConstructionError& e) {
    err << "construction failed: " << e.what() << '\n';
    return kDegenerate;
  }
  return kOk;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace maxcross::cli
