#include "slidecam/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

#include "slidecam/approx.hpp"
#include "slidecam/exact.hpp"
#include "slidecam/gallery.hpp"
#include "slidecam/hitset.hpp"
#include "slidecam/io.hpp"
#include "slidecam/render.hpp"
#include "slidecam/treewidth.hpp"

namespace slidecam {

namespace {

class Session {
 public:
  Session(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err)
      : cfg_(cfg), in_(in), out_(out), err_(err), verbose_(std::getenv("SLIDECAM_LOG") != nullptr) {}

  int dispatch() {
    const std::string& c = cfg_.command;
    if (c == "validate") return validate();
    if (c == "pixelate") return pixelate_cmd();
    if (c == "solve") return solve();
    if (c == "generate") return generate_cmd();
    if (c == "verify") return verify();
    if (c == "bounds") return bounds();
    if (c == "export") return export_cmd();
    throw std::invalid_argument("unknown command '" + c + "'");
  }

 private:
  struct Problem {
    std::vector<std::size_t> crosses;
    std::vector<std::size_t> guards;
  };

  void log(const std::string& line) const {
    if (verbose_) err_ << "[slidecam] " << line << '\n';
  }

  std::string read_text(const std::string& path) const {
    if (path == "-") return {std::istreambuf_iterator<char>(in_), std::istreambuf_iterator<char>()};
    std::ifstream f(path);
    if (!f) throw FormatError("cannot read '" + path + "'");
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
  }

  void write_text(const std::string& path, const std::string& text) const {
    if (path.empty() || path == "-") {
      out_ << text;
      return;
    }
    std::ofstream f(path);
    if (!f) throw FormatError("cannot write '" + path + "'");
    f << text;
    log("wrote " + path);
  }

  OrthoPolygon load_polygon() const {
    const OrthoPolygon p = parse_polygon(read_text(cfg_.input));
    log("polygon with " + std::to_string(p.vertex_count()) + " vertices, " + std::to_string(p.holes.size()) + " holes");
    return p;
  }

  Problem select(const Pixelation& pix) const {
    Problem pr;
    if (cfg_.mode == "msc") return {pix.all_cross_ids(), pix.guard_ids(true, true)};
    if (cfg_.mode == "mhsc") return {pix.all_cross_ids(), pix.guard_ids(true, false)};
    if (cfg_.mode == "mvsc") return {pix.all_cross_ids(), pix.guard_ids(false, true)};
    if (cfg_.mode != "custom") throw std::invalid_argument("unknown mode '" + cfg_.mode + "'");
    if (cfg_.custom.empty()) throw std::invalid_argument("custom mode needs --custom FILE");
    json doc;
    try {
      doc = json::parse(read_text(cfg_.custom));
    } catch (const json::parse_error& e) {
      throw FormatError(std::string("custom problem JSON: ") + e.what());
    }
    pr.crosses = doc.contains("crosses") ? doc.at("crosses").get<std::vector<std::size_t>>() : pix.all_cross_ids();
    for (std::size_t c : pr.crosses) {
      if (c >= pix.crosses.size()) throw FormatError("cross id " + std::to_string(c) + " out of range");
    }
    const std::string o = doc.value("orientations", std::string("HV"));
    if (o != "H" && o != "V" && o != "HV") throw FormatError("orientations must be H, V or HV");
    const std::vector<std::size_t> allowed = pix.guard_ids(o != "V", o != "H");
    if (doc.contains("guards")) {
      for (std::size_t g : doc.at("guards").get<std::vector<std::size_t>>()) {
        if (g >= pix.guards.size()) throw FormatError("guard id " + std::to_string(g) + " out of range");
        if (std::binary_search(allowed.begin(), allowed.end(), g)) pr.guards.push_back(g);
      }
      std::sort(pr.guards.begin(), pr.guards.end());
      pr.guards.erase(std::unique(pr.guards.begin(), pr.guards.end()), pr.guards.end());
    } else {
      pr.guards = allowed;
    }
    return pr;
  }

  static int exit_for(SolveStatus s) {
    switch (s) {
      case SolveStatus::kOk: return kExitOk;
      case SolveStatus::kInfeasible: return kExitInfeasible;
      case SolveStatus::kNotPathSegmentation:
      case SolveStatus::kPreconditionViolated: return kExitInvalidInput;
      case SolveStatus::kCapExceeded:
      case SolveStatus::kWidthExceeded:
      case SolveStatus::kBudgetInsufficient:
      case SolveStatus::kTooLargeForOracle: return kExitLimit;
    }
    return kExitLimit;
  }

  void maybe_render(const Pixelation& pix, const std::vector<Camera>& cameras) const {
    if (cfg_.render.empty()) return;
    std::ofstream f(cfg_.render);
    if (!f) throw FormatError("cannot write '" + cfg_.render + "'");
    f << render_svg(pix, cameras);
    log("rendered " + cfg_.render);
  }

  int validate() {
    const OrthoPolygon p = load_polygon();
    write_text(cfg_.out, dump_polygon(p) + "\n");
    return kExitOk;
  }

  int pixelate_cmd() {
    const Pixelation pix = pixelate(load_polygon());
    write_text(cfg_.out, pixelation_summary(pix).dump(2) + "\n");
    maybe_render(pix, {});
    return kExitOk;
  }

  int solve() {
    const OrthoPolygon poly = load_polygon();
    const Pixelation pix = pixelate(poly);
    const Problem pr = select(pix);
    const std::size_t n = poly.vertex_count();
    out_ << "n=" << n << " pixels=" << pix.pixels.size() << " crosses=" << pr.crosses.size()
         << " guards=" << pr.guards.size() << " (of " << pix.guards.size() << " after dedup)\n";

    SolveResult result;
    json extra = json::object();
    if (cfg_.algo == "exact" || cfg_.algo == "greedy" || cfg_.algo == "bg") {
      const HittingInstance inst = build_instance(pix, pr.crosses, pr.guards);
      if (cfg_.algo == "exact") {
        result = brute_force_min_cover(inst, cfg_.cap);
      } else if (cfg_.algo == "greedy") {
        result = greedy_cover(inst);
      } else {
        const ApproxReport rep = bg_hitting_set(inst, {cfg_.seed, cfg_.net_constant, cfg_.round_constant});
        result = rep.result;
        extra["approx"] = approx_report_to_json(rep);
        log("bg guesses=" + std::to_string(rep.guesses.size()) + " iterations=" + std::to_string(rep.iterations));
      }
    } else if (cfg_.algo == "dp") {
      const DpPipeline dp = solve_with_treewidth(pix, pr.crosses, pr.guards, {cfg_.width_max});
      result = dp.result;
      extra["treewidth"] = {{"dual_width", dp.dual_width}, {"lifted_width", dp.lifted_width}, {"bags", dp.bags},
                            {"nice_nodes", dp.stats.nice_nodes}, {"max_table", dp.stats.max_table}};
      out_ << "dual width=" << dp.dual_width << " lifted width=" << dp.lifted_width << '\n';
    } else if (cfg_.algo == "path") {
      if (cfg_.mode != "msc") throw std::invalid_argument("--algo path solves msc only");
      const PathGuard pg = path_guard(poly);
      result = pg.result;
      extra["peel_steps"] = pg.steps.size();
    } else {
      throw std::invalid_argument("unknown algorithm '" + cfg_.algo + "'");
    }

    if (!result.ok()) {
      err_ << "solve failed: " << to_string(result.status);
      if (!result.message.empty()) err_ << ": " << result.message;
      err_ << '\n';
      return exit_for(result.status);
    }
    if (!certify(pix, pr.crosses, result.solution)) {
      throw std::logic_error("solver returned a set that leaves crosses uncovered");
    }
    out_ << "mode=" << cfg_.mode << " algo=" << cfg_.algo << " size=" << result.solution.size() << '\n';
    out_ << "bounds: floor((3n+4)/16)=" << (3 * n + 4) / 16 << " floor(n/4)=" << n / 4
         << " floor((n+2)/6)=" << (n + 2) / 6 << '\n';

    json doc = solution_to_json(pix, result.solution);
    doc.update(extra);
    if (!cfg_.out.empty()) write_text(cfg_.out, doc.dump(2) + "\n");
    std::vector<Camera> cams;
    for (std::size_t id : result.solution.guards) cams.push_back({pix.guards[id].orientation, pix.guards[id].anchor, pix.guards[id].span});
    maybe_render(pix, cams);
    return kExitOk;
  }

  int generate_cmd() {
    const OrthoPolygon p = generate({shape_from_string(cfg_.shape), cfg_.k, cfg_.seed});
    write_text(cfg_.out, dump_polygon(p) + "\n");
    return kExitOk;
  }

  int verify() {
    if (cfg_.solution.empty()) throw std::invalid_argument("verify needs --solution FILE");
    const OrthoPolygon poly = load_polygon();
    const Pixelation pix = pixelate(poly);
    const Problem pr = select(pix);
    json doc;
    try {
      doc = json::parse(read_text(cfg_.solution));
    } catch (const json::parse_error& e) {
      throw FormatError(std::string("solution JSON: ") + e.what());
    }
    const std::vector<Camera> cams = cameras_from_solution_json(doc);
    std::vector<char> seen(pix.crosses.size(), 0);
    for (std::size_t i = 0; i < cams.size(); ++i) {
      const Camera& c = cams[i];
      if (!pix.grid.contains_segment2(c.orientation, 2 * c.anchor, 2 * c.span.lo, 2 * c.span.hi)) {
        throw FormatError("camera " + std::to_string(i) + " leaves the polygon");
      }
      for (std::size_t p : visible_region(pix, c.orientation, c.anchor, c.span)) seen[p] = 1;
    }
    std::vector<std::size_t> uncovered;
    for (std::size_t c : pr.crosses) {
      if (!seen[c]) uncovered.push_back(c);
    }
    maybe_render(pix, cams);
    if (uncovered.empty()) {
      out_ << "covered: " << cams.size() << " cameras guard all " << pr.crosses.size() << " crosses\n";
      return kExitOk;
    }
    out_ << "uncovered crosses:";
    for (std::size_t c : uncovered) out_ << ' ' << c;
    out_ << '\n';
    return kExitInfeasible;
  }

  int bounds() {
    if (cfg_.count == 0) {
      const BoundReport r = check_bounds(load_polygon());
      write_text(cfg_.out, bound_report_to_json(r).dump() + "\n");
      if (r.status != SolveStatus::kOk) return exit_for(r.status);
      return r.ok() ? kExitOk : kExitInfeasible;
    }
    const Shape shape = shape_from_string(cfg_.shape);
    std::vector<BoundReport> rows(cfg_.count);
    std::vector<std::string> errors(cfg_.count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next++; i < cfg_.count; i = next++) {
        try {
          rows[i] = check_bounds(generate({shape, cfg_.k, cfg_.seed + i}));
        } catch (const std::exception& e) {
          errors[i] = e.what();
        }
      }
    };
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < std::max<std::size_t>(1, cfg_.threads); ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::ostringstream text;
    std::size_t violations = 0, limited = 0;
    for (std::size_t i = 0; i < cfg_.count; ++i) {
      if (!errors[i].empty()) throw GenerationError(errors[i]);
      json row = bound_report_to_json(rows[i]);
      row["seed"] = cfg_.seed + i;
      text << row.dump() << '\n';
      if (rows[i].status != SolveStatus::kOk) ++limited;
      else if (!rows[i].ok()) ++violations;
    }
    write_text(cfg_.out, text.str());
    err_ << "instances=" << cfg_.count << " violations=" << violations << " too_large=" << limited << '\n';
    if (violations > 0) return kExitInfeasible;
    return limited > 0 ? kExitLimit : kExitOk;
  }

  int export_cmd() {
    const Pixelation pix = pixelate(load_polygon());
    if (cfg_.format == "instance") {
      const Problem pr = select(pix);
      write_text(cfg_.out, instance_to_json(build_instance(pix, pr.crosses, pr.guards)).dump(2) + "\n");
    } else if (cfg_.format == "td") {
      write_text(cfg_.out, decomposition_to_td(decompose(dual_graph(pix)), pix.pixels.size()));
    } else if (cfg_.format == "td-lifted") {
      const Problem pr = select(pix);
      const AuxiliaryGraph h = build_auxiliary_graph(pix, pr.crosses, pr.guards);
      write_text(cfg_.out, decomposition_to_td(lift_decomposition(decompose(dual_graph(pix)), h, pix), h.vertex_count()));
    } else {
      throw std::invalid_argument("unknown export format '" + cfg_.format + "'");
    }
    return kExitOk;
  }

  const RunConfig& cfg_;
  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
  bool verbose_;
};

}  // namespace

int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    return Session(config, in, out, err).dispatch();
  } catch (const PolygonError& e) {
    err << "invalid polygon (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const FormatError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const json::exception& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::invalid_argument& e) {
    err << "invalid arguments: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const GenerationError& e) {
    err << "generation failed: " << e.what() << '\n';
    return kExitLimit;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitLimit;
  }
}

}  // namespace slidecam
