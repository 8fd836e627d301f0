// octet: exact classification of convex octuples by conic incidences and
// analysis of their pencils of cubics.

#include <chrono>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "octet/acceptance.hpp"
#include "octet/json_io.hpp"
#include "octet/manifest.hpp"
#include "octet/svg.hpp"

using namespace octet;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("BadInput", "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path);
  if (!out) throw Error("BadInput", "cannot write " + path);
  out << data;
}

int exit_code_for(const Error& e) {
  const std::string& k = e.kind();
  if (k == "NonGenericOnConic" || k == "NotConvex" || k == "ThreeCollinear" ||
      k == "LabelingNotCyclic" || k == "SevenCoconic" || k == "BadInput" ||
      k == "BadRational" || k == "RankDeficient")
    return 2;
  return 3;
}

uint64_t file_hash(const std::string& data) { return fnv1a64(data); }

std::string with_manifest(const std::string& body, RunManifest man) {
  man.result_digest = fnv1a64(body);
  nlohmann::json j = nlohmann::json::parse(body);
  j["manifest"] = nlohmann::json::parse(man.to_json());
  return j.dump(2);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact conic-incidence classification of convex octuples"};
  app.require_subcommand(1);

  std::string in_path, out_path, orbit_label, atlas_path, level = "full", format = "json";
  int jobs = 2;
  uint64_t seed = 2026;
  bool draw_conics = false;
  int member_samples = 0;

  auto* analyze = app.add_subcommand("analyze", "classify a configuration");
  analyze->add_option("--in", in_path, "configuration JSON")->required();
  analyze->add_option("--out", out_path, "output path (default: stdout)");
  analyze->add_option("--format", format, "json|text");

  auto* enumerate = app.add_subcommand("enumerate", "build the full atlas");
  enumerate->add_option("--out", out_path, "atlas JSON path")->required();
  enumerate->add_option("--jobs", jobs, "parallel workers");
  enumerate->add_option("--seed", seed, "manifest seed");

  auto* realize = app.add_subcommand("realize", "emit a configuration for an orbit");
  realize->add_option("orbit", orbit_label, "orbit label, e.g. L84")->required();
  realize->add_option("--out", out_path, "output path (default: stdout)");
  realize->add_option("--atlas", atlas_path, "reuse an enumerated atlas JSON");
  realize->add_option("--jobs", jobs, "parallel workers");

  auto* pencil = app.add_subcommand("pencil", "analyze the pencil of cubics");
  pencil->add_option("--in", in_path, "configuration JSON")->required();
  pencil->add_option("--out", out_path, "output path (default: stdout)");

  auto* render = app.add_subcommand("render", "draw a configuration as SVG");
  render->add_option("--in", in_path, "configuration JSON")->required();
  render->add_option("--out", out_path, "SVG path")->required();
  render->add_flag("--conics", draw_conics, "draw the 56 five-point conics");
  render->add_option("--members", member_samples, "sampled pencil members to draw");

  auto* verify = app.add_subcommand("verify", "run the acceptance suite");
  verify->add_option("--level", level, "quick|full");
  verify->add_option("--jobs", jobs, "parallel workers");
  verify->add_option("--seed", seed, "sampling seed");

  CLI11_PARSE(app, argc, argv);

  auto t0 = std::chrono::steady_clock::now();
  RunManifest man;
  man.seed = seed;
  for (int i = 0; i < argc; i++) man.command += std::string(i ? " " : "") + argv[i];

  try {
    if (*analyze) {
      std::string text = read_file(in_path);
      man.input_hash = file_hash(text);
      Configuration c = config_from_json(text);
      require_convex(c);
      ListCode code = make_list_code(compute_position_table(c));
      man.elapsed_ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
              .count();
      std::string body;
      if (format == "text") {
        // orbit labels need the atlas; the text form reports the code only
        body = list_text(code) + "\n";
        if (!out_path.empty())
          write_file(out_path, body);
        else
          std::cout << body;
        return 0;
      }
      body = with_manifest(list_report_json(code, nullptr), man);
      if (!out_path.empty())
        write_file(out_path, body);
      else
        std::cout << body << "\n";
      return 0;
    }
    if (*enumerate) {
      BuildOptions bo;
      bo.jobs = jobs;
      Atlas a = build_atlas(default_seeds(), bo);
      man.elapsed_ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
              .count();
      std::string body = with_manifest(atlas_to_json(a), man);
      write_file(out_path, body);
      std::cout << "lists=" << a.nodes.size() << " orbits=" << a.orbits.size() << "\n";
      return 0;
    }
    if (*realize) {
      if (orbit_label.empty() || orbit_label[0] != 'L')
        throw Error("BadInput", "orbit label looks like L84");
      int label = std::stoi(orbit_label.substr(1));
      Configuration cfg;
      bool found = false;
      if (!atlas_path.empty()) {
        nlohmann::json j = nlohmann::json::parse(read_file(atlas_path));
        for (auto& [key, node] : j["lists"].items()) {
          (void)key;
          int orbit = node["orbit"].get<int>();
          auto& o = j["orbits"][orbit];
          for (auto& l : o["published_labels"])
            if (l.get<int>() == label) {
              auto& pts = node["realization"];
              for (int i = 0; i < 8; i++)
                cfg.pts[i] = ProjPoint(rat_from_string(pts[i][0].get<std::string>()),
                                       rat_from_string(pts[i][1].get<std::string>()));
              found = true;
              break;
            }
          if (found) break;
        }
      } else {
        BuildOptions bo;
        bo.jobs = jobs;
        Atlas a = build_atlas(default_seeds(), bo);
        int orbit = a.orbit_by_label(label);
        if (orbit >= 0) {
          cfg = a.nodes[a.orbits[orbit].members.front()].realization;
          found = true;
        }
      }
      if (!found) throw Error("BadInput", "orbit " + orbit_label + " not found");
      man.elapsed_ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
              .count();
      std::string body = with_manifest(config_to_json(cfg), man);
      if (!out_path.empty())
        write_file(out_path, body);
      else
        std::cout << body << "\n";
      return 0;
    }
    if (*pencil) {
      std::string text = read_file(in_path);
      man.input_hash = file_hash(text);
      Configuration c = config_from_json(text);
      PencilAnalysis a = analyze_pencil(c.pts);
      man.elapsed_ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
              .count();
      std::string body = with_manifest(pencil_report_json(a), man);
      if (!out_path.empty())
        write_file(out_path, body);
      else
        std::cout << body << "\n";
      return 0;
    }
    if (*render) {
      Configuration c = config_from_json(read_file(in_path));
      write_file(out_path, render_svg(c, draw_conics, member_samples));
      return 0;
    }
    if (*verify) {
      AcceptanceOptions ao;
      ao.quick = level == "quick";
      ao.jobs = jobs;
      ao.seed = seed;
      ao.log = [](const std::string& s) { std::cout << s << "\n" << std::flush; };
      auto res = run_acceptance(ao);
      int failed = 0;
      for (auto& r : res) failed += !r.pass;
      std::cout << (failed ? "FAILED" : "OK") << ": " << (res.size() - failed) << "/"
                << res.size() << " criteria passed\n";
      return failed ? 1 : 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 4;
}
