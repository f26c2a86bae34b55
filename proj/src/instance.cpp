#include "instance.h"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <vector>

namespace rp {

using json = nlohmann::json;

namespace {

// Builds a DOM in which every number keeps its source spelling, so that
// decimals convert to rationals without passing through a double.
class ExactSax {
public:
    json root;

    bool null() { return put(json(nullptr)); }
    bool boolean(bool v) { return put(json(v)); }
    bool number_integer(json::number_integer_t v) { return put(json(std::to_string(v))); }
    bool number_unsigned(json::number_unsigned_t v) { return put(json(std::to_string(v))); }
    bool number_float(json::number_float_t, const std::string& s) { return put(json(s)); }
    bool string(std::string& s) { return put(json(s)); }
    bool binary(json::binary_t&) { return put(json(nullptr)); }
    bool start_object(std::size_t) { return open(json::object()); }
    bool key(std::string& k) { key_ = k; return true; }
    bool end_object() { return close(); }
    bool start_array(std::size_t) { return open(json::array()); }
    bool end_array() { return close(); }
    bool parse_error(std::size_t pos, const std::string&, const nlohmann::detail::exception& ex)
    {
        error_pos = pos;
        error = ex.what();
        return false;
    }

    size_t error_pos = 0;
    std::string error;

private:
    std::vector<json*> stack_;
    std::vector<std::string> keys_;
    std::string key_;

    bool put(json v)
    {
        if (stack_.empty()) {
            root = std::move(v);
            return true;
        }
        json& top = *stack_.back();
        if (top.is_array())
            top.push_back(std::move(v));
        else
            top[key_] = std::move(v);
        return true;
    }
    bool open(json v)
    {
        json* slot;
        if (stack_.empty()) {
            root = std::move(v);
            slot = &root;
        } else {
            json& top = *stack_.back();
            if (top.is_array()) {
                top.push_back(std::move(v));
                slot = &top.back();
            } else {
                top[key_] = std::move(v);
                slot = &top[key_];
            }
        }
        keys_.push_back(key_);
        stack_.push_back(slot);
        return true;
    }
    bool close()
    {
        stack_.pop_back();
        key_ = keys_.back();
        keys_.pop_back();
        return true;
    }
};

std::pair<size_t, size_t> line_col(const std::string& text, size_t pos)
{
    size_t line = 1, col = 1;
    for (size_t i = 0; i < pos && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

Point read_point(const json& j, const std::string& what)
{
    if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
        throw ParseError(what + ": expected [x, y]", 0, 0);
    try {
        return Point(parse_scalar(j[0].get<std::string>()), parse_scalar(j[1].get<std::string>()));
    } catch (const std::exception& e) {
        throw ParseError(what + ": " + e.what(), 0, 0);
    }
}

json write_scalar(const Scalar& v)
{
    if (v.get_den() == 1 && mpz_fits_slong_p(v.get_num_mpz_t()))
        return json(v.get_num().get_si());
    return json(format_scalar(v));
}

json write_point(const Point& p) { return json::array({write_scalar(p.x()), write_scalar(p.y())}); }

}  // namespace

Instance parse_instance(const std::string& text)
{
    ExactSax sax;
    bool ok = json::sax_parse(text, &sax);
    if (!ok) {
        auto [line, col] = line_col(text, sax.error_pos);
        throw ParseError("syntax error at line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                             sax.error,
                         line, col);
    }
    const json& j = sax.root;
    if (!j.is_object())
        throw ParseError("top level must be an object", 1, 1);
    for (const char* field : {"vertices", "source", "target"})
        if (!j.contains(field))
            throw ParseError(std::string("missing field '") + field + "'", 1, 1);
    if (!j["vertices"].is_array())
        throw ParseError("'vertices' must be an array", 1, 1);
    std::vector<Point> pts;
    for (size_t i = 0; i < j["vertices"].size(); ++i)
        pts.push_back(read_point(j["vertices"][i], "vertex " + std::to_string(i)));
    Instance inst;
    if (j.contains("name") && j["name"].is_string())
        inst.name = j["name"].get<std::string>();
    inst.polygon = Polygon(std::move(pts));
    inst.source = read_point(j["source"], "source");
    inst.target = read_point(j["target"], "target");
    auto rep = validate_instance(inst);
    if (!rep.ok())
        throw InvalidInstance(rep.summary());
    return inst;
}

ValidationReport validate_instance(const Instance& inst)
{
    ValidationReport rep = validate(inst.polygon);
    if (!rep.ok())
        return rep;
    if (!locate(inst.polygon, inst.source).in_closure())
        rep.issues.push_back({"source-outside", {}, "source lies outside the polygon"});
    if (!locate(inst.polygon, inst.target).in_closure())
        rep.issues.push_back({"target-outside", {}, "target lies outside the polygon"});
    if (inst.source == inst.target)
        rep.issues.push_back({"coincident-endpoints", {}, "source and target coincide"});
    return rep;
}

std::string serialize_instance(const Instance& inst)
{
    // fixed field order so that output is byte-stable
    std::ostringstream os;
    os << "{\n";
    if (!inst.name.empty())
        os << "  \"name\": " << json(inst.name).dump() << ",\n";
    os << "  \"vertices\": [\n";
    for (int i = 0; i < inst.polygon.size(); ++i)
        os << "    " << write_point(inst.polygon[i]).dump() << (i + 1 < inst.polygon.size() ? ",\n" : "\n");
    os << "  ],\n";
    os << "  \"source\": " << write_point(inst.source).dump() << ",\n";
    os << "  \"target\": " << write_point(inst.target).dump() << "\n";
    os << "}\n";
    return os.str();
}

Instance load_instance(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    Instance inst = parse_instance(ss.str());
    return inst;
}

void save_instance(const Instance& inst, const std::string& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << serialize_instance(inst);
}

}  // namespace rp
