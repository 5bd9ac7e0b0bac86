#include "jacobi/quotient.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>

#include "jacobi/error.hpp"
#include "jacobi/linalg.hpp"
#include "jacobi/relations.hpp"

namespace jacobi {

namespace fs = std::filesystem;

namespace {

constexpr int kFormatVersion = 1;

std::mutex g_memo_mutex;
std::map<std::string, QuotientPtr> g_memo;
std::mutex g_config_mutex;
std::string g_cache_dir;
std::function<void(const std::string&)> g_warn = [](const std::string& m) { std::cerr << "warning: " << m << '\n'; };

void warn(const std::string& m) {
  std::function<void(const std::string&)> h;
  {
    std::lock_guard lock(g_config_mutex);
    h = g_warn;
  }
  if (h) h(m);
}

int color_leg_count(const Diagram& d, int color) { return static_cast<int>(d.legs_of_color(color).size()); }

bool matches_profile(const Diagram& d, const std::vector<int>& profile) {
  for (int c = 0; c < static_cast<int>(profile.size()); ++c)
    if (profile[c] >= 0 && color_leg_count(d, c) != profile[c]) return false;
  return true;
}

std::string profile_string(const std::vector<int>& p) {
  std::string out;
  for (size_t i = 0; i < p.size(); ++i) out += (i ? "," : "") + std::to_string(p[i]);
  return out.empty() ? "-" : out;
}

}  // namespace

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

QuotientMethod resolve_method(const Support& support, QuotientMethod m) {
  if (m != QuotientMethod::Auto) return m;
  return support.has_colors() ? QuotientMethod::Full : QuotientMethod::Chord;
}

std::string method_name(QuotientMethod m) {
  switch (m) {
    case QuotientMethod::Auto:
      return "auto";
    case QuotientMethod::Full:
      return "full";
    case QuotientMethod::Chord:
      return "chord";
  }
  return "?";
}

class QuotientBuilder {
 public:
  static QuotientSpace build(const Support& support, int degree, QuotientMethod method, const std::vector<int>& profile,
                             int cap) {
    QuotientSpace q;
    q.support_ = support;
    q.degree_ = degree;
    q.method_ = method;
    q.color_legs_ = profile;

    EnumerateOptions eo;
    eo.cap = cap;
    eo.chord_only = method == QuotientMethod::Chord;
    eo.color_max = profile;

    for (const auto& k : enumerate(support, degree, eo))
      if (matches_profile(decode_diagram(support, k.code), profile)) q.columns_.push_back(k.code);
    q.index();

    Eliminator elim(static_cast<int>(q.columns_.size()));
    auto add = [&](const Combination& rel) {
      SparseRow row;
      row.reserve(rel.size());
      for (const auto& [code, c] : rel.terms()) {
        auto it = q.index_.find(code);
        if (it == q.index_.end()) throw Error("relation term outside the enumerated classes");
        row.emplace_back(it->second, c);
      }
      elim.add(row);
    };
    if (method == QuotientMethod::Chord) {
      for (const auto& rel : four_t_relations(support, degree)) add(rel);
    } else {
      for (const auto& code : enumerate_codes(support, degree, eo)) {
        Diagram d = decode_diagram(support, code);
        if (!matches_profile(d, profile)) continue;
        for (int v = 0; v < d.num_vertices(); ++v) {
          if (d.vertex(v).kind != VertexKind::Skeleton) continue;
          if (d.vertex(d.neighbor(half_edge(v, 0))).univalent()) continue;
          add(stu_relation(d, v));
        }
        for (HalfEdge h : d.edges()) {
          int u = vertex_of(h), w = d.neighbor(h);
          if (u == w || d.vertex(u).univalent() || d.vertex(w).univalent()) continue;
          add(ihx_relation(d, h));
        }
      }
    }
    elim.finalize();
    q.coords_.reserve(q.columns_.size());
    for (int c = 0; c < static_cast<int>(q.columns_.size()); ++c) q.coords_.push_back(elim.column(c));
    for (int c : elim.free_columns()) q.basis_.push_back(q.columns_[c]);
    return q;
  }

  static std::optional<QuotientSpace> parse(const std::string& text, const std::string& expected_key) {
    auto fail = [] { return std::optional<QuotientSpace>(); };
    size_t cut = text.rfind("checksum ");
    if (cut == std::string::npos || (cut > 0 && text[cut - 1] != '\n')) return fail();
    std::string body = text.substr(0, cut);
    std::istringstream tail(text.substr(cut + 9));
    std::string sum;
    tail >> sum;
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(body)));
    if (sum != buf) return fail();

    std::istringstream in(body);
    std::string line;
    if (!std::getline(in, line) || line != "jacobi-basis-cache " + std::to_string(kFormatVersion)) return fail();
    if (!std::getline(in, line) || line != "key " + expected_key) return fail();

    std::istringstream kin(expected_key);
    std::string sup, method, profile;
    int degree;
    kin >> sup >> degree >> method >> profile;
    QuotientSpace q;
    q.support_ = Support::parse(sup);
    q.degree_ = degree;
    q.method_ = method == "chord" ? QuotientMethod::Chord : QuotientMethod::Full;
    if (profile != "-") {
      std::istringstream pin(profile);
      std::string item;
      while (std::getline(pin, item, ',')) q.color_legs_.push_back(std::stoi(item));
    }

    size_t ncols = 0, dim = 0;
    if (!std::getline(in, line)) return fail();
    {
      std::istringstream h(line);
      std::string w1, w2;
      if (!(h >> w1 >> ncols >> w2 >> dim) || w1 != "columns" || w2 != "dim") return fail();
    }
    for (size_t c = 0; c < ncols; ++c) {
      if (!std::getline(in, line)) return fail();
      std::istringstream row(line);
      std::string tag, hex;
      if (!(row >> tag >> hex) || tag != "c" || hex.size() % 2) return fail();
      std::string code;
      for (size_t i = 0; i < hex.size(); i += 2) code.push_back(static_cast<char>(std::stoi(hex.substr(i, 2), nullptr, 16)));
      Coordinates v(dim);
      for (size_t i = 0; i < dim; ++i) {
        std::string tok;
        if (!(row >> tok)) return fail();
        try {
          v[i] = parse_rational(tok);
        } catch (const Error&) {
          return fail();
        }
      }
      q.columns_.push_back(std::move(code));
      q.coords_.push_back(std::move(v));
    }
    if (!std::getline(in, line)) return fail();
    std::istringstream bl(line);
    std::string tag;
    bl >> tag;
    if (tag != "basis") return fail();
    size_t idx;
    while (bl >> idx) {
      if (idx >= ncols) return fail();
      q.basis_.push_back(q.columns_[idx]);
    }
    if (q.basis_.size() != dim) return fail();
    q.index();
    return q;
  }
};

void QuotientSpace::index() {
  index_.clear();
  for (int i = 0; i < static_cast<int>(columns_.size()); ++i) index_.emplace(columns_[i], i);
}

Combination QuotientSpace::basis_element(int i) const {
  Combination out(support_);
  out.add_code(basis_.at(i), 1);
  return out;
}

Coordinates QuotientSpace::reduce(const Combination& x) const {
  if (x.support() != support_) throw DomainError("reduce: support mismatch");
  Coordinates out(basis_.size());
  auto accumulate = [&](const std::string& code, const Rational& c) {
    auto it = index_.find(code);
    if (it == index_.end()) return false;
    const auto& v = coords_[it->second];
    for (size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) out[i] += c * v[i];
    return true;
  };
  for (const auto& [code, c] : x.terms()) {
    if (code_degree(code) != degree_)
      throw DomainError("reduce: degree " + std::to_string(code_degree(code)) + " term in a degree " +
                        std::to_string(degree_) + " space");
    if (accumulate(code, c)) continue;
    Diagram d = decode_diagram(support_, code);
    if (!matches_profile(d, color_legs_)) throw DomainError("reduce: leg profile mismatch");
    if (method_ != QuotientMethod::Chord) throw Error("reduce: class missing from the enumeration");
    const Combination chords = chordify(d);
    for (const auto& [cc, q] : chords.terms())
      if (!accumulate(cc, c * q)) throw Error("reduce: chord diagram missing from the enumeration");
  }
  return out;
}

Combination QuotientSpace::lift(const Coordinates& c) const {
  Combination out(support_);
  for (size_t i = 0; i < c.size() && i < basis_.size(); ++i) out.add_code(basis_[i], c[i]);
  return out;
}

std::string QuotientSpace::cache_key() const {
  return support_.to_string() + " " + std::to_string(degree_) + " " + method_name(method_) + " " +
         profile_string(color_legs_);
}

std::string store_quotient_text(const QuotientSpace& q) {
  std::ostringstream out;
  out << "jacobi-basis-cache " << kFormatVersion << '\n';
  out << "key " << q.cache_key() << '\n';
  out << "columns " << q.num_classes() << " dim " << q.dim() << '\n';
  std::unordered_map<std::string, size_t> pos;
  for (size_t i = 0; i < q.class_codes().size(); ++i) {
    const auto& code = q.class_codes()[i];
    pos[code] = i;
    out << "c " << code_hex(code);
    Combination one(q.support());
    one.add_code(code, 1);
    for (const auto& x : q.reduce(one)) out << ' ' << x.get_str();
    out << '\n';
  }
  out << "basis";
  for (const auto& b : q.basis_codes()) out << ' ' << pos[b];
  out << '\n';
  std::string body = out.str();
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(body)));
  return body + "checksum " + buf + "\n";
}

std::optional<QuotientSpace> load_quotient_text(const std::string& text, const std::string& expected_key) {
  try {
    return QuotientBuilder::parse(text, expected_key);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void set_cache_dir(const std::string& dir) {
  std::lock_guard lock(g_config_mutex);
  g_cache_dir = dir;
}

std::string cache_dir() {
  std::lock_guard lock(g_config_mutex);
  return g_cache_dir;
}

void set_warning_handler(std::function<void(const std::string&)> handler) {
  std::lock_guard lock(g_config_mutex);
  g_warn = std::move(handler);
}

void clear_quotient_memo() {
  std::lock_guard lock(g_memo_mutex);
  g_memo.clear();
}

namespace {

fs::path cache_file(const std::string& dir, const std::string& key) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(key)));
  return fs::path(dir) / (std::string("basis-") + buf + ".txt");
}

std::optional<std::string> read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// One writer per key: the lock file is created exclusively and removed after
// the rename. A lock older than ten minutes is treated as abandoned.
bool try_lock(const fs::path& lock) {
  for (int attempt = 0; attempt < 2; ++attempt) {
    int fd = ::open(lock.c_str(), O_CREAT | O_EXCL | O_WRONLY, 0644);
    if (fd >= 0) {
      ::close(fd);
      return true;
    }
    std::error_code ec;
    auto when = fs::last_write_time(lock, ec);
    if (ec) continue;
    if (fs::file_time_type::clock::now() - when > std::chrono::minutes(10))
      fs::remove(lock, ec);
    else
      return false;
  }
  return false;
}

void store_file(const fs::path& path, const std::string& text) {
  std::error_code ec;
  fs::create_directories(path.parent_path(), ec);
  fs::path lock = path;
  lock += ".lock";
  if (!try_lock(lock)) return;  // another process is writing the same key
  fs::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << text;
    out.flush();
    if (!out) {
      warn("cannot write cache file " + tmp.string());
      fs::remove(tmp, ec);
      fs::remove(lock, ec);
      return;
    }
  }
  fs::rename(tmp, path, ec);
  if (ec) {
    warn("cannot rename cache file into place: " + ec.message());
    fs::remove(tmp, ec);
  }
  fs::remove(lock, ec);
}

}  // namespace

QuotientPtr quotient_basis(const Support& support, int degree, const QuotientOptions& opts) {
  if (degree < 0) throw DomainError("negative degree");
  if (degree > opts.cap)
    throw CapExceeded("degree " + std::to_string(degree) + " exceeds the enumeration cap " + std::to_string(opts.cap));
  support.check();
  QuotientMethod method = resolve_method(support, opts.method);
  if (method == QuotientMethod::Chord && support.has_colors())
    throw DomainError("the chord method needs a skeleton-only support");
  std::vector<int> profile = opts.color_legs;
  if (static_cast<int>(profile.size()) > support.num_colors()) throw DomainError("leg profile longer than the color list");
  profile.resize(support.num_colors(), -1);

  std::string key = support.to_string() + " " + std::to_string(degree) + " " + method_name(method) + " " +
                    profile_string(profile);
  {
    std::lock_guard lock(g_memo_mutex);
    auto it = g_memo.find(key);
    if (it != g_memo.end()) return it->second;
  }

  std::string dir = cache_dir();
  std::optional<QuotientSpace> loaded;
  if (!dir.empty()) {
    fs::path path = cache_file(dir, key);
    if (auto text = read_file(path)) {
      loaded = load_quotient_text(*text, key);
      if (!loaded) warn("corrupt or outdated cache file " + path.string() + ", recomputing");
    }
  }
  QuotientPtr q;
  if (loaded) {
    q = std::make_shared<const QuotientSpace>(std::move(*loaded));
  } else {
    q = std::make_shared<const QuotientSpace>(QuotientBuilder::build(support, degree, method, profile, opts.cap));
    if (!dir.empty()) store_file(cache_file(dir, key), store_quotient_text(*q));
  }
  std::lock_guard lock(g_memo_mutex);
  return g_memo.emplace(key, q).first->second;
}

CacheStats cache_stats(const std::string& dir) {
  CacheStats s;
  std::error_code ec;
  if (dir.empty() || !fs::exists(dir, ec)) return s;
  for (const auto& e : fs::directory_iterator(dir, ec)) {
    auto name = e.path().filename().string();
    if (name.rfind("basis-", 0) != 0) continue;
    if (e.path().extension() == ".txt") {
      ++s.files;
      s.bytes += e.file_size(ec);
    } else if (e.path().extension() == ".lock") {
      ++s.locks;
    }
  }
  return s;
}

int cache_purge(const std::string& dir) {
  int n = 0;
  std::error_code ec;
  if (dir.empty() || !fs::exists(dir, ec)) return 0;
  std::vector<fs::path> doomed;
  for (const auto& e : fs::directory_iterator(dir, ec))
    if (e.path().filename().string().rfind("basis-", 0) == 0) doomed.push_back(e.path());
  for (const auto& p : doomed)
    if (fs::remove(p, ec)) ++n;
  clear_quotient_memo();
  return n;
}

}  // namespace jacobi
