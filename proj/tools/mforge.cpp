// mforge: command-line front end for the recognizers, catalog, templates and
// the verification suite.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "mforge/jobs.hpp"

namespace {

using namespace mforge;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::precondition, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void print_certificate(const ClassCertificate& c) {
  std::cout << "certificate: " << to_string(c.kind) << '\n';
  switch (c.kind) {
    case CertificateKind::graph:
      std::cout << format_graph(c.graph);
      break;
    case CertificateKind::signed_graph:
      std::cout << format_signed_graph(c.signed_graph);
      break;
    case CertificateKind::coextension_row:
      std::cout << "row: " << c.row.str() << '\n' << format_graph(c.graph);
      break;
    default:
      break;
  }
}

int cmd_recognize(const std::string& cls, const std::string& input, bool certificate) {
  auto kind = class_kind_from_string(cls);
  if (!kind) throw Error(ErrorKind::unknown_name, "unknown class '" + cls + "'");
  BinaryMatroid m = parse_matroid(read_file(input));
  if (*kind == ClassKind::blocking_pair) {
    auto r = blocking_pair_membership(m);
    std::cout << (r.member ? "true" : "false") << '\n';
    if (certificate && r.embedding) {
      std::cout << "embedding:";
      for (const auto& [a, b] : *r.embedding) std::cout << ' ' << a << "->" << b;
      std::cout << '\n';
    }
    return 0;
  }
  Recognition r;
  switch (*kind) {
    case ClassKind::graphic: r = is_graphic(m); break;
    case ClassKind::cographic: r = is_cographic(m); break;
    case ClassKind::even_cycle: r = is_even_cycle(m); break;
    case ClassKind::even_cut: r = is_even_cut(m); break;
    default: break;
  }
  std::cout << (r.member ? "true" : "false") << '\n';
  if (certificate && r.certificate) print_certificate(*r.certificate);
  return 0;
}

int cmd_catalog(const std::string& name, bool info) {
  if (name == "list") {
    for (const auto& n : catalog_names()) std::cout << n << '\n';
    return 0;
  }
  BinaryMatroid m = catalog(name);
  if (info) {
    std::cout << "name: " << name << "\nelements: " << m.size() << "\nrank: " << m.rank()
              << "\nsimple: " << (is_simple(m) ? "yes" : "no")
              << "\ncosimple: " << (is_simple(dual(m)) ? "yes" : "no") << '\n';
    return 0;
  }
  std::cout << format_matrix(catalog_matrix(name));
  return 0;
}

FrameTemplate load_template(const std::string& name_or_file) {
  for (const auto& n : template_names())
    if (n == name_or_file) return template_catalog(n);
  return parse_template(read_file(name_or_file));
}

int cmd_template(const std::string& which, const std::string& action, std::size_t n, bool virtual_mode) {
  FrameTemplate t = load_template(which);
  if (action == "show") {
    std::cout << format_template(t);
    return 0;
  }
  if (action != "generate") throw Error(ErrorKind::precondition, "template action must be 'generate' or 'show'");
  if (n == 0) throw Error(ErrorKind::precondition, "--frame-size is required for generate");
  std::cout << format_matroid(largest_simple_conforming(t, n, virtual_mode));
  return 0;
}

int cmd_minor(const std::string& host_file, const std::string& target_file) {
  BinaryMatroid host = parse_matroid(read_file(host_file));
  BinaryMatroid target = parse_matroid(read_file(target_file));
  auto r = find_minor(host, target);
  if (!r.witness) {
    std::cout << "false\n";
    return 0;
  }
  std::cout << "true\ncontract:";
  for (auto l : r.witness->contract_set.labels(host)) std::cout << ' ' << l;
  std::cout << "\ndelete:";
  for (auto l : r.witness->delete_set.labels(host)) std::cout << ' ' << l;
  std::cout << "\nmapping:";
  for (const auto& [a, b] : r.witness->mapping) std::cout << ' ' << a << "->" << b;
  std::cout << '\n';
  return 0;
}

int cmd_verify(const std::string& what, bool as_json, const std::string& budget, bool timing) {
  RunOptions o;
  o.heavy = budget == "heavy";
  o.timing = timing;
  std::vector<VerificationReport> reports;
  if (is_filter(what)) reports = run_suite(what, o);
  else reports.push_back(run_job(what, o));
  bool ok = true;
  for (const auto& r : reports) {
    if (as_json) {
      std::cout << to_json(r).dump() << '\n';
    } else {
      std::cout << r.id << ' ' << to_string(r.status);
      if (timing) std::cout << ' ' << r.elapsed_ms << "ms";
      std::cout << '\n';
    }
    if (r.status != JobStatus::verified && r.status != JobStatus::skipped) ok = false;
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"binary matroid workbench"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "run verification jobs");
  std::string verify_what, budget = "standard";
  bool as_json = false, no_timing = false;
  verify->add_option("job", verify_what, "job id or suite filter")->required();
  verify->add_flag("--json", as_json, "one JSON report per line");
  verify->add_option("--budget", budget, "standard or heavy")->check(CLI::IsMember({"fast", "standard", "heavy"}));
  verify->add_flag("--no-timing", no_timing, "report elapsed_ms as 0");

  auto* recognize = app.add_subcommand("recognize", "class membership");
  std::string cls, input;
  bool certificate = false;
  recognize->add_option("class", cls)->required()->check(
      CLI::IsMember({"graphic", "cographic", "even-cycle", "even-cut", "blocking-pair"}));
  recognize->add_option("--input", input)->required();
  recognize->add_flag("--certificate", certificate);

  auto* cat = app.add_subcommand("catalog", "named matroids ('list' for names)");
  std::string cat_name;
  bool cat_matrix = false, cat_info = false;
  cat->add_option("name", cat_name)->required();
  auto* mflag = cat->add_flag("--matrix", cat_matrix);
  cat->add_flag("--info", cat_info)->excludes(mflag);

  auto* tmpl = app.add_subcommand("template", "frame templates");
  std::string tmpl_name, tmpl_action;
  std::size_t frame_size = 0;
  bool virtual_mode = false;
  tmpl->add_option("template", tmpl_name, "catalog name or template file")->required();
  tmpl->add_option("action", tmpl_action, "generate or show")->required();
  tmpl->add_option("--frame-size", frame_size);
  tmpl->add_flag("--virtual", virtual_mode);

  auto* minor = app.add_subcommand("minor", "minor test with witness");
  std::string host_file, target_file;
  minor->add_option("--host", host_file)->required();
  minor->add_option("--target", target_file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*verify) return cmd_verify(verify_what, as_json, budget, !no_timing);
    if (*recognize) return cmd_recognize(cls, input, certificate);
    if (*cat) return cmd_catalog(cat_name, cat_info);
    if (*tmpl) return cmd_template(tmpl_name, tmpl_action, frame_size, virtual_mode);
    if (*minor) return cmd_minor(host_file, target_file);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::unknown_name ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
