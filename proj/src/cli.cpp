#include "tanlim/cli.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "tanlim/sequences.hpp"

namespace tanlim::cli {

using nlohmann::json;

namespace {

const std::vector<std::string> kVars{"x", "y", "z"};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json node_json(const ChartNode& n) {
  json subs = json::object();
  for (const auto& [v, p] : n.substitution) subs[v] = p.str();
  json div = json::array();
  for (const auto& d : n.divisor) div.push_back(d.key);
  json j{{"id", n.id},
         {"parent", n.parent},
         {"kind", n.kind},
         {"vars", n.vars},
         {"substitution", subs},
         {"strict_transform", n.strict_transform.str()},
         {"exceptional_multiplicity", n.exceptional_multiplicity},
         {"divisor", div},
         {"flags", n.flags},
         {"depth", n.depth}};
  j["exceptional"] = n.exceptional_var ? json(n.vars[*n.exceptional_var]) : json(nullptr);
  return j;
}

json point_json(const std::vector<Rat>& p) {
  json a = json::array();
  for (const auto& c : p) a.push_back(c.get_str());
  return a;
}

json proj_json(const ProjPoint& p) { return json::array({p.a.get_str(), p.b.get_str(), p.c.get_str()}); }

json trace_json(const Trace& t) {
  json nodes = json::array();
  for (const auto& n : t.tree.nodes()) nodes.push_back(node_json(n));
  json events = json::array();
  for (const auto& e : t.events)
    events.push_back({{"kind", e.kind},
                      {"rule", e.rule},
                      {"node", e.node},
                      {"point", point_json(e.point)},
                      {"result", e.result},
                      {"detail", e.detail}});
  json labels = json::object();
  for (const auto& [k, a] : t.labels) labels[k] = a.value_str();
  return {{"nodes", nodes}, {"events", events}, {"labels", labels}};
}

std::string event_line(const Event& e) {
  std::string s = "  [n" + std::to_string(e.node) + "] " + e.kind;
  if (!e.rule.empty()) s += " " + e.rule;
  if (!e.point.empty()) s += " at " + point_str(e.point);
  if (!e.result.empty()) s += ": " + e.result;
  if (!e.detail.empty()) s += " (" + e.detail + ")";
  return s + "\n";
}

std::string trace_text(const Trace& t) {
  std::string s = "nodes:\n";
  for (const auto& n : t.tree.nodes()) {
    s += "  [n" + std::to_string(n.id) + "] " + n.kind;
    if (n.parent >= 0) s += " of n" + std::to_string(n.parent);
    s += ", depth " + std::to_string(n.depth) + ": " + n.strict_transform.str();
    if (n.exceptional_var) s += "  (" + n.vars[*n.exceptional_var] + "^" + std::to_string(n.exceptional_multiplicity) + ")";
    s += "\n";
  }
  s += "events:\n";
  for (const auto& e : t.events) s += event_line(e);
  return s;
}

std::string verdict_line(const LimitVerdict& v) {
  if (v.kind == LimitKind::Full) return "FULL (" + v.reason + " at depth " + std::to_string(v.depth) + ")";
  std::string s = "FINITE {";
  for (std::size_t i = 0; i < v.points.size(); ++i) s += (i ? ", " : "") + v.points[i].str();
  return s + "}";
}

json verdict_json(const LimitVerdict& v) {
  json pts = json::array();
  for (const auto& p : v.points) pts.push_back(proj_json(p));
  return {{"kind", v.kind == LimitKind::Full ? "full" : "finite"},
          {"points", pts},
          {"pencils", json::array()},
          {"unresolved", v.unresolved},
          {"rule", v.rule},
          {"reason", v.reason},
          {"depth", v.depth}};
}

json classical_json(const ClassicalLimit& c) {
  json pts = json::array();
  for (const auto& p : c.dual_points) pts.push_back(proj_json(p));
  json pencils = json::array();
  for (const auto& p : c.pencils) {
    json forms = json::array();
    for (const auto& f : p.forms) forms.push_back(f.str());
    pencils.push_back({{"line", p.line_str()}, {"direction", proj_json(p.direction)}, {"forms", forms}});
  }
  return {{"kind", c.full || !c.pencils.empty() ? "full" : "finite"},
          {"points", pts},
          {"pencils", pencils},
          {"unresolved", c.unresolved},
          {"dual_curve", c.full}};
}

Options options_for(const Request& req) {
  Options o = default_options();
  if (req.max_depth > 0) o.max_depth = req.max_depth;
  return o;
}

void require_on_surface(const MPoly& f, const std::vector<Rat>& p) {
  if (f.eval(p) != 0) throw InputError("point " + point_str(p) + " is not on the surface");
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

Response tangent_cone_cmd(const Request& req, const MPoly& f) {
  MPoly cone = tangent_cone({f, req.point, req.divisor});
  if (req.json) return {0, dump({{"tangent_cone", cone.str()}, {"multiplicity", order_at_origin(cone)}}), ""};
  return {0, cone.str() + "\n", ""};
}

Response discriminant_cmd(const Request& req, const MPoly& f) {
  MPoly local = translate(f, req.point);
  std::size_t drop = 2;
  if (!req.divisor.empty()) {
    auto d = projection_for(local, req.divisor);
    if (!d) throw InputError("no projection compatible with the divisor");
    drop = *d;
  }
  MPoly disc = discriminant(local, drop);
  if (req.json) return {0, dump({{"discriminant", disc.str()}, {"drop", kVars[drop]}}), ""};
  return {0, disc.str() + "\n", ""};
}

Response blowup_cmd(const Request& req, const MPoly& f) {
  BlowupTree tree;
  std::vector<DivisorComponent> div;
  for (std::size_t v : req.divisor) div.push_back({"N" + kVars[v], v});
  int root = tree.add_root(f, div);
  auto kids = point_blowup(tree, root, req.point);
  if (req.json) {
    json charts = json::array();
    for (int k : kids) charts.push_back(node_json(tree.at(k)));
    return {0, dump({{"charts", charts}}), ""};
  }
  std::string s;
  for (int k : kids) {
    const auto& n = tree.at(k);
    std::string subs;
    for (const auto& [v, p] : n.substitution) subs += (subs.empty() ? "" : ", ") + v + " = " + p.str();
    s += "chart " + n.vars[*n.exceptional_var] + " [" + subs + "]: " + n.strict_transform.str() +
         "  (exceptional multiplicity " + std::to_string(n.exceptional_multiplicity) + ")\n";
  }
  return {0, s, ""};
}

Response decide_cmd(const Request& req, const MPoly& f, bool trace_only) {
  if (req.divisor.empty()) throw InputError("decide needs a divisor (--divisor)");
  require_on_surface(f, req.point);
  Decision d = decide(f, req.point, req.divisor, options_for(req));
  int status = d.verdict.kind == LimitKind::Finite && !d.verdict.unresolved.empty() ? 2 : 0;
  if (req.json) return {status, dump({{"verdict", verdict_json(d.verdict)}, {"trace", trace_json(d.trace)}}), ""};
  std::string s = trace_only ? trace_text(d.trace) : verdict_line(d.verdict) + "\n";
  if (!trace_only && req.verbose) s += trace_text(d.trace);
  for (const auto& u : d.verdict.unresolved) s += "unresolved: " + u + "\n";
  return {status, s, ""};
}

Response limit_cmd(const Request& req, const MPoly& f, bool trace_only) {
  require_on_surface(f, req.point);
  ClassicalResult c = classical_limit(f, req.point, options_for(req));
  int status = c.limit.unresolved.empty() ? 0 : 2;
  if (req.json) return {status, dump({{"verdict", classical_json(c.limit)}, {"trace", trace_json(c.trace)}}), ""};
  std::string s = trace_only ? trace_text(c.trace) : c.limit.describe() + "\n";
  if (!trace_only && req.verbose) s += trace_text(c.trace);
  for (const auto& u : c.limit.unresolved) s += "unresolved: " + u + "\n";
  return {status, s, ""};
}

}  // namespace

const std::vector<std::string>& commands() {
  static const std::vector<std::string> c{"tangent-cone", "discriminant", "blowup", "decide", "limit", "trace"};
  return c;
}

std::vector<Rat> parse_point(const std::string& text) {
  std::vector<Rat> p;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    Rat r;
    if (item.empty() || r.set_str(item, 10) != 0) throw InputError("bad coordinate '" + item + "'");
    r.canonicalize();
    if (r.get_den() == 0) throw InputError("bad coordinate '" + item + "'");
    p.push_back(r);
  }
  if (p.size() != 3) throw InputError("a point needs three coordinates");
  return p;
}

std::vector<std::size_t> parse_divisor(const std::string& text) {
  std::vector<std::size_t> d;
  for (char c : text) {
    if (c == ',' || c == ' ') continue;
    auto it = std::find(kVars.begin(), kVars.end(), std::string(1, c));
    if (it == kVars.end()) throw InputError(std::string("unknown divisor plane '") + c + "'");
    std::size_t v = static_cast<std::size_t>(it - kVars.begin());
    if (std::find(d.begin(), d.end(), v) != d.end()) throw InputError("repeated divisor plane");
    d.push_back(v);
  }
  if (d.size() > 2) throw InputError("at most two divisor planes");
  return d;
}

Response run(const Request& req) {
  try {
    if (std::find(commands().begin(), commands().end(), req.command) == commands().end())
      throw InputError("unknown command '" + req.command + "'");
    if (req.point.size() != 3) throw InputError("a point needs three coordinates");
    MPoly f = parse_poly(req.surface, kVars);
    if (f.is_zero()) throw InputError("the zero polynomial does not define a surface");
    if (req.command == "tangent-cone") return tangent_cone_cmd(req, f);
    if (req.command == "discriminant") return discriminant_cmd(req, f);
    if (req.command == "blowup") return blowup_cmd(req, f);
    if (req.command == "decide") return decide_cmd(req, f, false);
    if (req.command == "limit") return limit_cmd(req, f, false);
    return req.divisor.empty() ? limit_cmd(req, f, true) : decide_cmd(req, f, true);
  } catch (const ParseError& e) {
    return {1, "", std::string("parse error: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    return {1, "", std::string("error: ") + e.what() + "\n"};
  }
}

bool verify_json_trace(const std::string& text) {
  json j = json::parse(text);
  const json& t = j.contains("trace") ? j["trace"] : j;
  std::map<int, std::pair<std::vector<std::string>, MPoly>> seen;
  for (const auto& n : t.at("nodes")) {
    auto vars = n.at("vars").get<std::vector<std::string>>();
    MPoly strict = parse_poly(n.at("strict_transform").get<std::string>(), vars);
    int id = n.at("id").get<int>(), parent = n.at("parent").get<int>();
    seen.emplace(id, std::make_pair(vars, strict));
    if (parent < 0) continue;
    auto it = seen.find(parent);
    if (it == seen.end()) return false;
    std::map<std::string, MPoly> subs;
    for (const auto& [v, p] : n.at("substitution").items()) subs.emplace(v, parse_poly(p.get<std::string>(), vars));
    MPoly total = substitute(it->second.second, subs, vars);
    if (n.at("exceptional").is_null()) {
      if (total != strict) return false;
      continue;
    }
    MPoly e = parse_poly(n.at("exceptional").get<std::string>(), vars);
    int m = n.at("exceptional_multiplicity").get<int>();
    if (total != pow(e, static_cast<unsigned>(m)) * strict) return false;
    if (divide_exact(strict, e)) return false;
  }
  return true;
}

}  // namespace tanlim::cli
