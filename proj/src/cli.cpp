#include "qfock/cli.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "qfock/serialize.hpp"

namespace qfock {

namespace {

constexpr int kCacheVersion = 1;

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string cache_key(const CompositionLabel& l, bool p1) {
  return "macdonald/v" + std::to_string(kCacheVersion) + "/" + exponent_key(l.lambda) + "/" +
         exponent_key(l.sigma) + (p1 ? "/p1" : "/generic");
}

std::string monomial_string(const std::vector<int>& e) {
  std::ostringstream os;
  bool any = false;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    os << (any ? "*" : "") << "z" << i + 1;
    if (e[i] != 1) os << "^" << e[i];
    any = true;
  }
  return any ? os.str() : "1";
}

std::string charpoly_string(const CharPoly& c) {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    os << (first ? "" : " + ");
    first = false;
    std::string m = monomial_string(it->first);
    if (it->second != 1) os << it->second << (m == "1" ? "" : "*");
    if (it->second == 1 || m != "1") os << m;
  }
  return os.str();
}

long char_dim(const CharPoly& c) {
  long d = 0;
  for (const auto& [e, m] : c) d += m;
  return d;
}

bool json_format(const std::string& f) { return f == "json"; }

void add_format(CLI::App* sub, std::string& format) {
  sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json"}));
}

// Subcommand options are stored here and read after parsing.
struct Options {
  std::string format = "table";
  int n = 2;
  int N = 0;
  int M = 0;
  int degree = 0;
  int l = -1;
  int k = 0;
  int cutoff = 0;
  int a0 = 0;
  std::string lambda;
  std::string sigma = "min";
  std::string word;
  std::string action;
  std::string a;
  std::string p = "generic";
  std::string strip;
  bool p1 = false;
  bool character = false;
  bool dim = false;
  bool compare = false;
  bool solve = false;
  bool no_intertwining = false;
};

int cmd_macdonald(const Options& o, std::ostream& out) {
  std::vector<int> lambda = parse_int_list(o.lambda);
  if (o.N != 0 && static_cast<int>(lambda.size()) != o.N)
    throw std::invalid_argument("--lambda must have N entries");
  std::vector<CompositionLabel> labels;
  if (o.sigma == "min") {
    labels.push_back(CompositionLabel::min(lambda));
  } else if (o.sigma == "list") {
    std::vector<int> sorted = lambda;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    for (const auto& s : s_lambda_order(sorted).elements) labels.push_back(CompositionLabel::make(sorted, s));
  } else {
    labels.push_back(CompositionLabel::make(lambda, parse_int_list(o.sigma)));
  }
  Json arr = Json::array();
  for (const auto& l : labels) {
    PolyVector f = cached_macdonald(l, o.p1);
    if (json_format(o.format)) {
      arr.push_back({{"lambda", l.lambda}, {"sigma", l.sigma}, {"p1", o.p1}, {"polynomial", to_json(f)}});
    } else {
      out << "lambda=(" << exponent_key(l.lambda) << ") sigma=(" << exponent_key(l.sigma) << ")"
          << (o.p1 ? " p=1" : "") << "\n  " << f.to_string() << "\n";
    }
  }
  if (json_format(o.format)) out << arr.dump(2) << "\n";
  return kExitOk;
}

int cmd_straighten(const Options& o, std::ostream& out) {
  if (o.n < 2) throw std::invalid_argument("--n must be at least 2");
  Word w = parse_int_list(o.word);
  WedgeVec v = straighten(w, o.n);
  if (json_format(o.format)) {
    out << Json{{"n", o.n}, {"word", w}, {"terms", to_json(v)}}.dump(2) << "\n";
    return kExitOk;
  }
  if (v.empty()) out << "0\n";
  for (auto it = v.rbegin(); it != v.rend(); ++it)
    out << "(" << it->second.to_string() << ") " << word_to_string(it->first) << "\n";
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.n < 2) throw std::invalid_argument("--n must be at least 2");
  if (o.p != "generic" && o.p != "1") throw std::invalid_argument("--p must be generic or 1");
  const PMode p = o.p == "1" ? PMode::one : PMode::generic;
  ActionContext ctx;
  std::vector<Word> basis;
  if (o.action == "eval") {
    std::vector<int> a = parse_int_list(o.a);
    if (a.empty()) throw std::invalid_argument("--a is required for the evaluation action");
    ctx = ActionContext::eval(o.n, a);
    basis = colour_words(o.n, static_cast<int>(a.size()));
  } else if (o.action == "u0-n" || o.action == "u1-n") {
    if (o.l < 0) throw std::invalid_argument("--l is required for finite wedge actions");
    const int N = residue(o.M, o.n) + o.n * o.l;
    if (N == 0) throw std::invalid_argument("finite wedge of length 0");
    ctx = o.action == "u0-n" ? ActionContext::u0_n(o.n, N, p) : ActionContext::u1_n(o.n, N);
    for (int k = 0; k <= o.degree; ++k)
      for (const Word& w : wedge_space_basis(o.M, o.l, k, o.n)) basis.push_back(w);
  } else if (o.action == "u0-fock" || o.action == "u1-fock") {
    ctx = o.action == "u0-fock" ? ActionContext::u0_fock(o.n, o.M, p) : ActionContext::u1_fock(o.n, o.M);
    for (int k = 0; k <= o.degree; ++k)
      for (const Word& w : fock_component_basis(o.M, k, o.n)) basis.push_back(w);
  } else {
    throw std::invalid_argument("unknown action " + o.action);
  }
  RelationReport r = verify_relations(ctx, basis);
  if (json_format(o.format)) {
    Json j{{"context", ctx.describe()}, {"basisSize", basis.size()}};
    j.update(to_json(r));
    out << j.dump(2) << "\n";
  } else {
    out << ctx.describe() << ", " << basis.size() << " basis vectors\n" << r.to_string()
        << (r.pass() ? "PASS" : "FAIL") << "\n";
  }
  return r.pass() ? kExitOk : kExitMismatch;
}

int cmd_strip_module(const Options& o, std::ostream& out) {
  if (o.n < 2) throw std::invalid_argument("--n must be at least 2");
  BorderStrip th = parse_strip(o.strip);
  const int N = strip_size(th);
  Subspace im = image_basis(strip_product(th, o.a0, StripVariant::R, o.n));
  const int sst = static_cast<int>(enumerate_sst(strip_to_skew(th), o.n).size());
  CharPoly ch = subspace_character(im, o.n, N);
  CharPoly schur = skew_schur(strip_to_skew(th), o.n);
  const bool dim_ok = im.dim() == sst;
  const bool char_ok = ch == schur;
  const bool ok = dim_ok && (!o.character || char_ok);
  if (json_format(o.format)) {
    Json j{{"n", o.n}, {"strip", th}, {"a0", o.a0}, {"dim", im.dim()}, {"sstCount", sst}};
    if (o.character) {
      j["character"] = to_json(ch);
      j["skewSchur"] = to_json(schur);
    }
    j["status"] = ok ? "MATCH" : "MISMATCH";
    out << j.dump(2) << "\n";
  } else {
    out << "strip " << strip_to_string(th) << ", n=" << o.n << ", a0=" << o.a0 << "\n";
    if (o.dim || !o.character) out << "dim Im R = " << im.dim() << ", SST count = " << sst << "\n";
    if (o.character) out << "character  " << charpoly_string(ch) << "\nskew Schur " << charpoly_string(schur) << "\n";
    out << (ok ? "MATCH" : "MISMATCH") << "\n";
  }
  return ok ? kExitOk : kExitMismatch;
}

int cmd_characters(const Options& o, std::ostream& out) {
  if (o.n < 2) throw std::invalid_argument("--n must be at least 2");
  if (o.k < 0 || o.k >= o.n) throw std::invalid_argument("--k must lie in [0, n)");
  if (o.cutoff < 0) throw std::invalid_argument("--cutoff must be non-negative");
  GradedChar rhs = char_level1(o.n, o.k, o.cutoff);
  std::optional<CharIdentityReport> cmp;
  if (o.compare) cmp = character_identity_check(o.n, o.k, o.cutoff);
  const bool ok = !cmp || cmp->match;
  if (json_format(o.format)) {
    Json j{{"n", o.n}, {"k", o.k}, {"cutoff", o.cutoff}, {"character", to_json(rhs)}};
    if (cmp) {
      j["fockCharacter"] = to_json(cmp->lhs);
      j["offset"] = cmp->offset;
      j["badGrade"] = cmp->bad_grade ? Json(*cmp->bad_grade) : Json(nullptr);
      j["status"] = ok ? "MATCH" : "MISMATCH";
    }
    out << j.dump(2) << "\n";
  } else {
    out << "grade  dim  character\n";
    for (const auto& [d, c] : rhs)
      out << std::setw(5) << d << std::setw(5) << char_dim(c) << "  " << charpoly_string(c) << "\n";
    if (cmp) {
      if (cmp->bad_grade) out << "first differing grade " << *cmp->bad_grade << "\n";
      out << (ok ? "MATCH" : "MISMATCH") << "\n";
    }
  }
  return ok ? kExitOk : kExitMismatch;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  if (o.n < 2) throw std::invalid_argument("--n must be at least 2");
  if (o.degree < 0) throw std::invalid_argument("--degree must be non-negative");
  DecompOptions opt;
  opt.intertwining = !o.no_intertwining;
  DecompReport r = psi_k_check(o.n, o.M, o.degree, opt);
  if (json_format(o.format)) {
    out << to_json(r).dump(2) << "\n";
  } else {
    out << "F_" << r.M << " degree " << r.k << ", n=" << r.n << ": quotient dim " << r.quotient_dim
        << ", image rank " << r.image_rank << "\n";
    out << "strip        lambda        grade  dim  character\n";
    for (const auto& e : r.entries)
      out << std::left << std::setw(13) << strip_to_string(e.theta) << std::setw(14)
          << ("(" + exponent_key(e.lambda) + ")") << std::right << std::setw(5) << e.grade << std::setw(5) << e.dim
          << "  " << charpoly_string(e.character) << "\n";
    for (const auto& d : r.details) out << "  " << d << "\n";
    out << (r.match() ? "MATCH" : "MISMATCH") << "\n";
  }
  return r.match() ? kExitOk : kExitMismatch;
}

int cmd_sl2(const Options& o, std::ostream& out) {
  BorderStrip th = parse_strip(o.strip);
  const int N = strip_size(th);
  std::vector<Sl2Factor> f = sl2_factorize(th);
  Subspace im = image_basis(strip_product(decomposition_labels(th), StripVariant::R, 2));
  CharPoly lhs = sl2_character(f), rhs = reduce_weights(subspace_character(im, 2, N));
  bool ok = sl2_dim(f) == im.dim() && lhs == rhs;
  std::optional<IntertwinerResult> x;
  if (o.solve) {
    x = sl2_intertwiner(th, f);
    ok = ok && x->invertible;
  }
  if (json_format(o.format)) {
    Json fac = Json::array();
    for (const auto& s : f) fac.push_back({{"n", s.n}, {"b", s.b}});
    Json j{{"strip", th}, {"factors", fac}, {"dim", sl2_dim(f)}, {"imageDim", im.dim()},
           {"character", to_json(lhs)}, {"imageCharacter", to_json(rhs)}};
    if (x) j["intertwiner"] = {{"solutionDim", x->kernel_dim}, {"invertible", x->invertible}};
    j["status"] = ok ? "MATCH" : "MISMATCH";
    out << j.dump(2) << "\n";
  } else {
    out << "strip " << strip_to_string(th) << " = ";
    if (f.empty()) out << "trivial";
    for (std::size_t i = 0; i < f.size(); ++i)
      out << (i ? " (x) " : "") << "W_" << f[i].n << "(" << f[i].b << ")";
    out << "\ndim " << sl2_dim(f) << ", dim Im R = " << im.dim() << "\ncharacter " << charpoly_string(lhs)
        << "\nIm R      " << charpoly_string(rhs) << "\n";
    if (x) out << "intertwiners: " << x->kernel_dim << (x->invertible ? ", invertible" : ", none invertible") << "\n";
    out << (ok ? "MATCH" : "MISMATCH") << "\n";
  }
  return ok ? kExitOk : kExitMismatch;
}

}  // namespace

PolyVector cached_macdonald(const CompositionLabel& label, bool p1) {
  auto compute = [&] { return p1 ? macdonald_phi_p1(label) : macdonald_phi(label); };
  const char* dir = std::getenv("QFOCK_CACHE_DIR");
  if (!dir || !*dir) return compute();
  namespace fs = std::filesystem;
  const std::string key = cache_key(label, p1);
  std::ostringstream name;
  name << "macdonald-v" << kCacheVersion << "-" << std::hex << std::setw(16) << std::setfill('0') << fnv1a(key)
       << ".json";
  const fs::path path = fs::path(dir) / name.str();
  if (std::ifstream in{path}) {
    try {
      Json j = Json::parse(in);
      if (j.at("version").get<int>() == kCacheVersion && j.at("key").get<std::string>() == key)
        return poly_from_json(j.at("polynomial"));
    } catch (const std::exception&) {
      // unreadable entries are recomputed and overwritten
    }
  }
  PolyVector f = compute();
  std::error_code ec;
  fs::create_directories(dir, ec);
  const fs::path tmp = path.string() + ".tmp" + std::to_string(std::random_device{}());
  {
    std::ofstream os{tmp};
    os << Json{{"version", kCacheVersion}, {"key", key}, {"polynomial", to_json(f)}}.dump() << "\n";
  }
  fs::rename(tmp, path, ec);
  if (ec) fs::remove(tmp, ec);
  return f;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations on the q-deformed Fock space", "qfock"};
  app.require_subcommand(1);
  Options o;

  auto* mac = app.add_subcommand("macdonald", "Non-symmetric Macdonald polynomial");
  mac->add_option("--N", o.N, "Number of variables");
  mac->add_option("--lambda", o.lambda, "Exponents, e.g. 0,1")->required();
  mac->add_option("--sigma", o.sigma, "min, list, or a permutation such as 2,1");
  mac->add_flag("--p1", o.p1, "Specialize at p = 1");

  auto* st = app.add_subcommand("straighten", "Normally ordered expansion of a wedge");
  st->add_option("--n", o.n)->required();
  st->add_option("--word", o.word, "Indices, e.g. 3,5,4")->required();

  auto* ver = app.add_subcommand("verify", "Check the defining relations of an action");
  ver->add_option("--action", o.action)
      ->required()
      ->check(CLI::IsMember({"u0-n", "u1-n", "u0-fock", "u1-fock", "eval"}));
  ver->add_option("--n", o.n)->required();
  ver->add_option("--M", o.M, "Charge");
  ver->add_option("--degree", o.degree, "Largest degree checked");
  ver->add_option("--l", o.l, "Finite wedge length s + n l");
  ver->add_option("--a", o.a, "Evaluation parameters, e.g. 0,2");
  ver->add_option("--p", o.p, "generic or 1");

  auto* sm = app.add_subcommand("strip-module", "Image of the R-matrix product of a border strip");
  sm->add_option("--n", o.n)->required();
  sm->add_option("--strip", o.strip, "Column heights from the right, e.g. 2,1,3")->required();
  sm->add_option("--a0", o.a0, "Base spectral label");
  sm->add_flag("--character", o.character, "Compare the weight character with the skew Schur function");
  sm->add_flag("--dim", o.dim, "Print the dimension");

  auto* ch = app.add_subcommand("characters", "Border-strip character of the level-1 module");
  ch->add_option("--n", o.n)->required();
  ch->add_option("--k", o.k)->required();
  ch->add_option("--cutoff", o.cutoff)->required();
  ch->add_flag("--compare", o.compare, "Compare with the Fock quotient");

  auto* dec = app.add_subcommand("decompose", "Verify the decomposition of a Fock quotient component");
  dec->add_option("--n", o.n)->required();
  dec->add_option("--M", o.M);
  dec->add_option("--degree", o.degree)->required();
  dec->add_flag("--no-intertwining", o.no_intertwining, "Skip the U0 intertwining checks");

  auto* sl = app.add_subcommand("sl2", "Factor an sl2 border-strip module into evaluation modules");
  sl->add_option("--strip", o.strip)->required();
  sl->add_flag("--solve", o.solve, "Solve for an explicit intertwiner");

  for (auto* s : {mac, st, ver, sm, ch, dec, sl}) add_format(s, o.format);

  std::vector<const char*> argv{"qfock"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*mac) return cmd_macdonald(o, out);
    if (*st) return cmd_straighten(o, out);
    if (*ver) return cmd_verify(o, out);
    if (*sm) return cmd_strip_module(o, out);
    if (*ch) return cmd_characters(o, out);
    if (*dec) return cmd_decompose(o, out);
    if (*sl) return cmd_sl2(o, out);
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace qfock
