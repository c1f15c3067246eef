#pragma once

#include <expat.h>

#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "uiprune/common.hpp"
#include "uiprune/corpus.hpp"
#include "uiprune/csv.hpp"
#include "uiprune/textprep.hpp"

namespace uiprune {

struct UIElement {
  std::string element_id;
  int release_ordinal = 0;
  std::string element_type;
  std::string variable_name;
  std::string label;
  std::string icon_name;

  bool operator==(const UIElement&) const = default;
};

using StringTable = std::map<std::string, std::string>;

namespace xml {

using Attributes = std::vector<std::pair<std::string, std::string>>;

/// Thin callback adapter over an Expat parser. Throws InputError with the
/// line and column of the first syntax error.
class SaxParser {
 public:
  std::function<void(const std::string&, const Attributes&)> on_start;
  std::function<void(const std::string&)> on_end;
  std::function<void(std::string_view)> on_text;

  void parse(std::string_view text, const std::string& origin) {
    std::unique_ptr<XML_ParserStruct, decltype(&XML_ParserFree)> p(XML_ParserCreate("UTF-8"), &XML_ParserFree);
    if (!p) throw Error("cannot allocate XML parser");
    XML_SetUserData(p.get(), this);
    XML_SetElementHandler(p.get(), &SaxParser::start_cb, &SaxParser::end_cb);
    XML_SetCharacterDataHandler(p.get(), &SaxParser::text_cb);
    if (XML_Parse(p.get(), text.data(), static_cast<int>(text.size()), 1) == XML_STATUS_ERROR) {
      throw InputError(origin + ":" + std::to_string(XML_GetCurrentLineNumber(p.get())) + ":" +
                       std::to_string(XML_GetCurrentColumnNumber(p.get())) + ": " +
                       XML_ErrorString(XML_GetErrorCode(p.get())));
    }
  }

 private:
  static void start_cb(void* ud, const XML_Char* name, const XML_Char** atts) {
    auto* self = static_cast<SaxParser*>(ud);
    if (!self->on_start) return;
    Attributes a;
    for (int i = 0; atts[i]; i += 2) a.emplace_back(atts[i], atts[i + 1]);
    self->on_start(name, a);
  }
  static void end_cb(void* ud, const XML_Char* name) {
    auto* self = static_cast<SaxParser*>(ud);
    if (self->on_end) self->on_end(name);
  }
  static void text_cb(void* ud, const XML_Char* s, int len) {
    auto* self = static_cast<SaxParser*>(ud);
    if (self->on_text) self->on_text(std::string_view(s, static_cast<std::size_t>(len)));
  }
};

inline std::string local_name(std::string_view qname) {
  auto c = qname.rfind(':');
  return std::string(c == std::string_view::npos ? qname : qname.substr(c + 1));
}

inline const std::string* find_attr(const Attributes& a, std::string_view name) {
  for (const auto& [k, v] : a)
    if (k == name) return &v;
  return nullptr;
}

}  // namespace xml

// ---------------------------------------------------------------------------
// strings.xml

namespace detail {

// Android resource string escapes: \' \" \n \t \\ and optional enclosing quotes.
inline std::string unescape_android(std::string_view s) {
  auto t = trim(s);
  if (t.size() >= 2 && t.front() == '"' && t.back() == '"') t = t.substr(1, t.size() - 2);
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] == '\\' && i + 1 < t.size()) {
      char n = t[++i];
      switch (n) {
        case 'n': out += '\n'; break;
        case 't': out += '\t'; break;
        default: out += n;
      }
    } else {
      out += t[i];
    }
  }
  return out;
}

}  // namespace detail

inline StringTable parse_strings_text(std::string_view text, const std::string& origin, Diagnostics* diag = nullptr) {
  StringTable table;
  std::string key, value;
  int depth_in_string = 0;

  xml::SaxParser p;
  p.on_start = [&](const std::string& name, const xml::Attributes& a) {
    if (depth_in_string > 0) {
      ++depth_in_string;  // <b>, <xliff:g> and friends: keep their text only
      return;
    }
    if (name != "string") return;
    auto* n = xml::find_attr(a, "name");
    if (!n) {
      if (diag) diag->warn(origin + ": <string> without a name attribute skipped");
      return;
    }
    key = *n;
    value.clear();
    depth_in_string = 1;
  };
  p.on_end = [&](const std::string&) {
    if (depth_in_string == 0) return;
    if (--depth_in_string == 0) {
      if (table.count(key) && diag) diag->warn(origin + ": duplicate string '" + key + "', keeping the later value");
      table[key] = detail::unescape_android(value);
    }
  };
  p.on_text = [&](std::string_view s) {
    if (depth_in_string > 0) value += s;
  };
  p.parse(text, origin);
  return table;
}

inline StringTable parse_strings(const std::filesystem::path& path, Diagnostics* diag = nullptr) {
  return parse_strings_text(csv::read_file(path), path.string(), diag);
}

// ---------------------------------------------------------------------------
// Layouts

namespace detail {

inline std::optional<std::string> id_name(std::string_view v) {
  for (std::string_view prefix : {"@+id/", "@id/", "@android:id/", "@+android:id/"})
    if (starts_with(v, prefix) && v.size() > prefix.size()) return std::string(v.substr(prefix.size()));
  return std::nullopt;
}

inline std::string resolve_label(const std::string& v, const StringTable& strings, const std::string& where,
                                 Diagnostics* diag) {
  for (std::string_view prefix : {"@string/", "@android:string/"}) {
    if (!starts_with(v, prefix)) continue;
    std::string key = v.substr(prefix.size());
    if (auto it = strings.find(key); it != strings.end()) return it->second;
    if (diag) diag->warn(where + ": unresolved string reference '" + v + "'");
    return key;
  }
  if (!v.empty() && (v.front() == '@' || v.front() == '?')) return {};  // dimension, style, attr...
  return v;
}

inline std::string drawable_name(std::string_view v) {
  for (std::string_view prefix : {"@drawable/", "@mipmap/", "@android:drawable/", "@android:mipmap/"})
    if (starts_with(v, prefix)) return std::string(v.substr(prefix.size()));
  return {};
}

}  // namespace detail

inline std::vector<UIElement> parse_layout_text(std::string_view text, const std::string& origin,
                                                const StringTable& strings, int release_ordinal,
                                                Diagnostics* diag = nullptr) {
  std::vector<UIElement> out;
  xml::SaxParser p;
  p.on_start = [&](const std::string& name, const xml::Attributes& a) {
    auto* id = xml::find_attr(a, "android:id");
    if (!id) return;
    auto var = detail::id_name(*id);
    if (!var) return;
    UIElement e;
    e.element_id = *var;
    e.variable_name = *var;
    e.release_ordinal = release_ordinal;
    e.element_type = xml::local_name(name);
    for (const char* attr : {"android:text", "android:hint", "android:contentDescription"}) {
      auto* v = xml::find_attr(a, attr);
      if (!v) continue;
      auto label = detail::resolve_label(*v, strings, origin + " (" + e.element_id + ")", diag);
      if (!trim(label).empty()) {
        e.label = label;
        break;
      }
    }
    for (const char* attr : {"android:src", "app:srcCompat", "android:drawableStart", "android:drawableLeft",
                             "android:drawableTop", "android:drawableRight", "android:drawableEnd",
                             "android:drawableBottom"}) {
      auto* v = xml::find_attr(a, attr);
      if (!v) continue;
      auto icon = detail::drawable_name(*v);
      if (!icon.empty()) {
        e.icon_name = icon;
        break;
      }
    }
    out.push_back(std::move(e));
  };
  p.parse(text, origin);
  return out;
}

/// Reads every *.xml directly under `dir` in sorted path order. A file that
/// cannot be read or parsed is reported in `diag` and skipped.
inline std::vector<UIElement> parse_layouts(const std::filesystem::path& dir, const StringTable& strings,
                                            int release_ordinal, Diagnostics* diag = nullptr) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw InputError("layout directory not found: " + dir.string());
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".xml") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<UIElement> out;
  for (const auto& f : files) {
    try {
      auto part = parse_layout_text(csv::read_file(f), f.string(), strings, release_ordinal, diag);
      out.insert(out.end(), part.begin(), part.end());
    } catch (const InputError& e) {
      if (diag) diag->warn(std::string("skipped layout: ") + e.what());
    }
  }
  return out;
}

/// Splits snake_case, camelCase and dotted class names into words.
inline std::string split_identifier(std::string_view id) {
  std::string out;
  for (std::size_t i = 0; i < id.size(); ++i) {
    char c = id[i];
    if (c == '_' || c == '.' || c == '-') {
      out += ' ';
      continue;
    }
    bool upper = std::isupper(static_cast<unsigned char>(c));
    if (upper && i > 0) {
      bool prev_lower = std::islower(static_cast<unsigned char>(id[i - 1])) || std::isdigit(static_cast<unsigned char>(id[i - 1]));
      bool prev_upper = std::isupper(static_cast<unsigned char>(id[i - 1]));
      bool next_lower = i + 1 < id.size() && std::islower(static_cast<unsigned char>(id[i + 1]));
      if (prev_lower || (prev_upper && next_lower)) out += ' ';
    }
    out += c;
  }
  return out;
}

inline std::vector<std::string> description_tokens(const UIElement& e, const TextPrep& prep) {
  std::string type = e.element_type;
  if (auto dot = type.rfind('.'); dot != std::string::npos) type = type.substr(dot + 1);
  std::string text = split_identifier(type) + " " + split_identifier(e.variable_name) + " " + e.label + " " +
                     split_identifier(e.icon_name);
  return prep.tokens(text);
}

inline std::vector<std::string> description_tokens(const UIElement& e) { return description_tokens(e, TextPrep()); }

/// Keeps the first element seen for each element_id.
inline std::vector<UIElement> dedupe_elements(const std::vector<UIElement>& elements, Diagnostics* diag = nullptr) {
  std::set<std::string> seen;
  std::vector<UIElement> out;
  for (const auto& e : elements) {
    if (seen.insert(e.element_id).second)
      out.push_back(e);
    else if (diag)
      diag->warn("duplicate element id '" + e.element_id + "' in release " + std::to_string(e.release_ordinal) +
                 ", keeping the first");
  }
  return out;
}

/// Loads one release from <root>/<version>/res/{layout,values/strings.xml}.
inline std::vector<UIElement> load_release_elements(const std::filesystem::path& release_dir, int release_ordinal,
                                                    Diagnostics* diag = nullptr) {
  auto strings_path = release_dir / "res" / "values" / "strings.xml";
  StringTable strings;
  if (std::filesystem::exists(strings_path))
    strings = parse_strings(strings_path, diag);
  else if (diag)
    diag->warn("no strings.xml under " + release_dir.string());
  return dedupe_elements(parse_layouts(release_dir / "res" / "layout", strings, release_ordinal, diag), diag);
}

/// Truth labels from element presence: an id present in release w and
/// absent from w+1 is labeled deleted at w; present in both, kept at w.
inline std::vector<DeletionLabel> derive_labels(const std::string& app_id,
                                                const std::vector<std::vector<UIElement>>& by_release) {
  std::vector<DeletionLabel> out;
  for (std::size_t w = 0; w + 1 < by_release.size(); ++w) {
    std::set<std::string> next;
    for (const auto& e : by_release[w + 1]) next.insert(e.element_id);
    std::set<std::string> cur;
    for (const auto& e : by_release[w]) cur.insert(e.element_id);
    for (const auto& id : cur) out.push_back({app_id, id, static_cast<int>(w), next.count(id) == 0});
  }
  return out;
}

inline std::string elements_csv(const std::vector<UIElement>& elements) {
  std::string out = csv::format_row({"element_id", "type", "variable", "label", "icon", "release_ordinal"});
  for (const auto& e : elements)
    out += csv::format_row({e.element_id, e.element_type, e.variable_name, e.label, e.icon_name,
                            std::to_string(e.release_ordinal)});
  return out;
}

}  // namespace uiprune
