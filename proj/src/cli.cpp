#include "towercalc/cli.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "towercalc/abgroup.hpp"
#include "towercalc/cohomology.hpp"
#include "towercalc/errors.hpp"
#include "towercalc/homotopy.hpp"
#include "towercalc/lift.hpp"
#include "towercalc/tower.hpp"

namespace towercalc::cli {

namespace {

int parse_int_arg(const std::string& text, const std::string& what) {
  const std::size_t start = !text.empty() && text[0] == '-' ? 1 : 0;
  if (start == text.size())
    throw std::invalid_argument("'" + text + "' is not an integer " + what);
  for (std::size_t i = start; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9')
      throw std::invalid_argument("'" + text + "' is not an integer " + what);
  return std::stoi(text);
}

struct SpaceRef {
  std::string name;
  int n = 0;
};

SpaceRef parse_space(const std::string& text) {
  const std::size_t open = text.find('(');
  if (open == std::string::npos || text.back() != ')')
    throw std::invalid_argument("expected <family>(<rank>), got '" + text +
                                "'");
  SpaceRef ref;
  ref.name = text.substr(0, open);
  ref.n = parse_int_arg(text.substr(open + 1, text.size() - open - 2),
                        "rank");
  return ref;
}

std::string join(const std::vector<std::string>& parts,
                 const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f)
    throw std::invalid_argument("cannot read profile file '" + path + "'");
  std::ostringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

int run_pi(const std::vector<std::string>& args, bool unicode,
           std::ostream& out) {
  if (args.size() != 2)
    throw std::invalid_argument("usage: pi <descriptor> <i>");
  const GroupDescriptor d = parse_descriptor(args[0]);
  const int i = parse_int_arg(args[1], "homotopy degree");
  const HomotopyAnswer answer = pi(d, i);
  if (!answer.is_known()) {
    out << "UNKNOWN: " << answer.note() << "\n";
    return 2;
  }
  out << answer.group().str(unicode) << "\n";
  return 0;
}

int run_tower(const std::vector<std::string>& args, bool unicode,
              std::ostream& out) {
  if (args.size() != 1)
    throw std::invalid_argument("usage: tower <descriptor>");
  out << render_tower(build_tower(parse_descriptor(args[0])), unicode);
  return 0;
}

int run_homology(const std::vector<std::string>& args, bool unicode,
                 std::ostream& out) {
  if (args.size() != 2)
    throw std::invalid_argument("usage: homology <BSO|BSpin>(<n>) <k>");
  const SpaceRef space = parse_space(args[0]);
  const int k = parse_int_arg(args[1], "degree");
  FgAbGroup g;
  if (space.name == "BSO")
    g = homology_bso(space.n, k);
  else if (space.name == "BSpin")
    g = homology_bspin(space.n, k);
  else
    throw std::invalid_argument(
        "homology tables cover BSO and BSpin, not '" + space.name + "'");
  out << g.str(unicode) << "\n";
  return 0;
}

int run_betti(const std::vector<std::string>& args, std::ostream& out) {
  if (args.size() != 2)
    throw std::invalid_argument("usage: betti BSpin(<n>) <k>");
  const SpaceRef space = parse_space(args[0]);
  if (space.name != "BSpin")
    throw std::invalid_argument("betti numbers cover BSpin only, not '" +
                                space.name + "'");
  out << betti_bspin(space.n, parse_int_arg(args[1], "degree")) << "\n";
  return 0;
}

int run_h4(const std::vector<std::string>& args, bool unicode,
           std::ostream& out) {
  if (args.size() != 1)
    throw std::invalid_argument("usage: h4 BSpin(<n>)");
  const SpaceRef space = parse_space(args[0]);
  if (space.name != "BSpin")
    throw std::invalid_argument("h4 covers BSpin only, not '" + space.name +
                                "'");
  const H4Result result = h4_bspin(space.n);
  std::vector<std::string> labels;
  for (const ClassRef& c : result.generators) labels.push_back(c.label());
  out << result.group.str(unicode) << " generated by " << join(labels, ", ")
      << "\n";
  return 0;
}

int run_ring(const std::vector<std::string>& args, std::ostream& out) {
  if (args.size() != 1)
    throw std::invalid_argument("usage: ring <BU|BSU|BSp|BSOQ>(<n>)");
  const SpaceRef space = parse_space(args[0]);
  RingFamily family;
  if (space.name == "BU")
    family = RingFamily::BU;
  else if (space.name == "BSU")
    family = RingFamily::BSU;
  else if (space.name == "BSp")
    family = RingFamily::BSp;
  else if (space.name == "BSOQ")
    family = RingFamily::BSOQ;
  else
    throw std::invalid_argument(
        "ring presentations cover BU, BSU, BSp and BSOQ, not '" +
        space.name + "'");
  const RingPresentation pres = ring_generators(family, space.n);
  for (const RingGenerator& g : pres.generators)
    out << g.name << " degree " << g.degree << "\n";
  if (!pres.relation.empty()) out << "relation: " << pres.relation << "\n";
  return 0;
}

int run_abgroup(const std::vector<std::string>& args, bool unicode,
                std::ostream& out) {
  if (args.empty())
    throw std::invalid_argument(
        "usage: abgroup <tensor|hom|ext|tor|sum> <group> <group> | abgroup "
        "snf <matrix>");
  const std::string& op = args[0];
  if (op == "snf") {
    if (args.size() != 2)
      throw std::invalid_argument("usage: abgroup snf '<matrix>'");
    const SnfResult r = smith_normal_form(parse_matrix(args[1]));
    out << "D: " << matrix_str(r.d) << "\n";
    out << "U: " << matrix_str(r.u) << "\n";
    out << "V: " << matrix_str(r.v) << "\n";
    return 0;
  }
  FgAbGroup (*fn)(const FgAbGroup&, const FgAbGroup&) = nullptr;
  if (op == "tensor")
    fn = tensor;
  else if (op == "hom")
    fn = hom;
  else if (op == "ext")
    fn = ext;
  else if (op == "tor")
    fn = tor;
  else if (op == "sum")
    fn = direct_sum;
  else
    throw std::invalid_argument("unknown abgroup operation '" + op + "'");
  if (args.size() != 3)
    throw std::invalid_argument("usage: abgroup " + op +
                                " <group> <group>");
  out << fn(parse_group(args[1]), parse_group(args[2])).str(unicode) << "\n";
  return 0;
}

struct FlagArgs {
  std::string profile_path;
  std::string option;  // --target or --kind value
  std::string descriptor;
};

FlagArgs parse_flag_args(const std::vector<std::string>& args,
                         const std::string& verb,
                         const std::string& option_flag) {
  FlagArgs parsed;
  bool have_descriptor = false;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--profile") {
      if (++i == args.size())
        throw std::invalid_argument("--profile needs a file path");
      parsed.profile_path = args[i];
    } else if (a == option_flag) {
      if (++i == args.size())
        throw std::invalid_argument(option_flag + " needs a value");
      parsed.option = args[i];
    } else if (!have_descriptor && !a.empty() && a[0] != '-') {
      parsed.descriptor = a;
      have_descriptor = true;
    } else {
      throw std::invalid_argument("unexpected argument '" + a + "'");
    }
  }
  if (parsed.profile_path.empty())
    throw std::invalid_argument(verb + " needs --profile <file>");
  if (parsed.option.empty())
    throw std::invalid_argument(verb + " needs " + option_flag + " <value>");
  if (!have_descriptor)
    throw std::invalid_argument(verb + " needs a group descriptor");
  return parsed;
}

int run_lift(const std::vector<std::string>& args, std::ostream& out) {
  const FlagArgs parsed = parse_flag_args(args, "lift", "--target");
  const CohomologyProfile profile =
      parse_profile(read_file(parsed.profile_path));
  const Tower tower = build_tower(parse_descriptor(parsed.descriptor));
  const int stage = target_stage_index(tower, parsed.option);
  const LiftVerdict verdict = evaluate_lift(profile, tower, stage);
  switch (verdict.status) {
    case LiftStatus::Lifts:
      out << "LIFTS\n";
      return 0;
    case LiftStatus::Obstructed:
      out << "OBSTRUCTED stage " << verdict.stage_index << ": "
          << join(verdict.class_ids, ", ") << "\n";
      return 3;
    case LiftStatus::Undetermined:
      out << "UNKNOWN: undetermined at stage " << verdict.stage_index << ": "
          << join(verdict.class_ids, ", ") << "\n";
      return 2;
  }
  throw std::logic_error("unhandled verdict");
}

int run_twisted(const std::vector<std::string>& args, std::ostream& out) {
  const FlagArgs parsed = parse_flag_args(args, "twisted", "--kind");
  const GroupDescriptor d = parse_descriptor(parsed.descriptor);
  TwistSpec spec;
  if (parsed.option == "GS") {
    spec = green_schwarz_spec();
  } else {
    TwistKind kind;
    if (parsed.option == "SO")
      kind = TwistKind::SO;
    else if (parsed.option == "Spin")
      kind = TwistKind::Spin;
    else if (parsed.option == "String")
      kind = TwistKind::String;
    else
      throw std::invalid_argument("unknown twist kind '" + parsed.option +
                                  "'");
    spec = twisted_descriptor(kind, d.p, d.q);
  }
  const CohomologyProfile profile =
      parse_profile(read_file(parsed.profile_path));
  const LiftVerdict verdict = evaluate_twisted(profile, spec);
  switch (verdict.status) {
    case LiftStatus::Lifts:
      out << "LIFTS\n";
      return 0;
    case LiftStatus::Obstructed:
      out << "OBSTRUCTED difference: " << verdict.difference->str() << "\n";
      return 3;
    case LiftStatus::Undetermined:
      out << "UNKNOWN: undetermined: " << join(verdict.class_ids, ", ")
          << "\n";
      return 2;
  }
  throw std::logic_error("unhandled verdict");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  bool unicode = false;
  std::vector<std::string> rest;
  for (const std::string& a : args) {
    if (a == "--unicode")
      unicode = true;
    else
      rest.push_back(a);
  }
  try {
    if (rest.empty())
      throw std::invalid_argument(
          "usage: towercalc "
          "<pi|tower|homology|betti|h4|ring|abgroup|lift|twisted> ... "
          "[--unicode]");
    const std::string verb = rest[0];
    const std::vector<std::string> vargs(rest.begin() + 1, rest.end());
    if (verb == "pi") return run_pi(vargs, unicode, out);
    if (verb == "tower") return run_tower(vargs, unicode, out);
    if (verb == "homology") return run_homology(vargs, unicode, out);
    if (verb == "betti") return run_betti(vargs, out);
    if (verb == "h4") return run_h4(vargs, unicode, out);
    if (verb == "ring") return run_ring(vargs, out);
    if (verb == "abgroup") return run_abgroup(vargs, unicode, out);
    if (verb == "lift") return run_lift(vargs, out);
    if (verb == "twisted") return run_twisted(vargs, out);
    throw std::invalid_argument("unknown verb '" + verb + "'");
  } catch (const OutsideTable& e) {
    out << "UNKNOWN: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 1;
  }
}

}  // namespace towercalc::cli
