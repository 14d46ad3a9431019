#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include <rknot/rknot.hpp>

namespace {

using namespace rknot;

constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;

std::string seq_str(const std::vector<int>& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + "]";
}

std::string quot_str(const std::vector<Int>& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    return s + "]";
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << content;
}

void cmd_expand(const std::string& frac, const std::string& mode) {
    Fraction r = Fraction::parse(frac);
    if (mode == "pm") {
        bool neg = r.sign() < 0;
        SignSeq s = expand_pm(r.abs());
        std::string cn = is_biregular(s) ? cn_biregular(s).get_str() : cn_positive(r.abs()).get_str();
        std::cout << (neg ? "-" : "") << seq_str(s.e) << "  ℓ=" << s.size() << "  cn=" << cn
                  << "  word=" << seq_to_word(s).str() << "\n";
        return;
    }
    if (mode == "abs") {
        bool neg = r.sign() < 0;
        SignSeq4 s = expand_abs(r.abs());
        Int cn = s.e[0] == s.e[1] ? cn_four(s) : crossing_number(canonicalize(r));
        std::cout << (neg ? "-" : "") << quot_str(s.quotients()) << "  ℓ=" << s.size()
                  << "  cn=" << cn.get_str() << "  σ=" << islets(s)
                  << "  word=" << seq4_to_word(s).str() << "\n";
        return;
    }
    throw CLI::ValidationError("--mode must be pm or abs");
}

void cmd_classify(const std::string& frac) {
    Fraction r = Fraction::parse(frac);
    TwoBridgeKnot k = canonicalize(r);
    std::cout << "class: " << k.str() << (k.is_link ? "  (two-component link)" : "") << "\n";
    std::cout << "crossing_number: " << crossing_number(k).get_str() << "\n";
    if (k.is_link) return;
    std::cout << "amphicheiral: " << (is_amphicheiral(k) ? "yes" : "no") << "\n";
    auto rep = palindromy_classify(knot_fraction(k));
    const char* cls = rep.cls == PalindromyClass::beta2_plus1    ? "beta^2 = +1 (mod alpha)"
                      : rep.cls == PalindromyClass::beta2_minus1 ? "beta^2 = -1 (mod alpha)"
                                                                 : "beta^2 = neither +-1 (mod alpha)";
    std::cout << "palindromy: " << cls << "\n";
    if (k.alpha > 1)
        std::cout << "minimal 3-strand diagram: b=" << minimal_b3(k) << "\n";
}

void cmd_harmonic(int a, int b, int c) {
    HarmonicKnot hk = make_harmonic(a, b, c);
    if (a == 3) {
        ReducedPair r = reduce_h3(b, c);
        if (r.trivial) {
            std::cout << "H(3," << b << "," << c << "): unknot\n";
            return;
        }
        Fraction f = h3_fraction(b, c);
        std::cout << "H(3," << b << "," << c << "): reduced (" << r.b << "," << r.c
                  << "), mirror parity " << r.parity % 2 << "\n";
        std::cout << "schubert fraction: " << f.str() << "\n";
        std::cout << "class: " << h3_class(b, c).str() << "\n";
        std::cout << "crossing_number: " << (r.b + r.c) / 3 << "\n";
        return;
    }
    if (a == 4) {
        ReducedPair r = reduce_h4(b, c);
        if (r.trivial) {
            std::cout << "H(4," << b << "," << c << "): unknot\n";
            return;
        }
        Fraction f = h4_fraction(b, c);
        std::cout << "H(4," << b << "," << c << "): reduced (" << r.b << "," << r.c
                  << "), mirror parity " << r.parity % 2 << "\n";
        std::cout << "schubert fraction: " << f.str() << "\n";
        std::cout << "class: " << h4_class(b, c).str() << "\n";
        std::cout << "crossing_number: " << (3 * r.b + r.c - 2) / 4 << "\n";
        return;
    }
    (void)hk;
    throw DomainError("classification covers a in {3,4}");
}

void cmd_is_harmonic(const std::string& frac, int a) {
    TwoBridgeKnot k = canonicalize(Fraction::parse(frac));
    auto report = [&](int which) {
        auto w = which == 3 ? is_harmonic3(k) : is_harmonic4(k);
        if (w)
            std::cout << "a=" << which << ": H(" << which << "," << w->b << "," << w->c << ")"
                      << (w->mirrored ? " up to mirror" : "") << "\n";
        else
            std::cout << "a=" << which << ": not harmonic\n";
    };
    if (a == 0 || a == 3) report(3);
    if (a == 0 || a == 4) report(4);
}

void cmd_parametrize(const std::string& frac, int a, const std::string& json_out,
                     const std::string& svg_out) {
    TwoBridgeKnot k = canonicalize(Fraction::parse(frac));
    Parametrization p = parametrize(k, a);
    std::cout << "x = T_" << p.a << "(t), y = T_" << p.b << "(t), z = C(t)\n";
    std::cout << "degree triple: (" << p.a << "," << p.b << "," << p.z.degree() << ")\n";
    std::cout << "C(t) = " << p.z.integer_scaled().str() << "\n";
    if (!json_out.empty()) write_file(json_out, parametrization_to_json(p).dump(2) + "\n");
    if (!svg_out.empty()) write_file(svg_out, render_svg(p));
}

void cmd_identify(const std::string& path) {
    nlohmann::json j;
    if (path == "-") {
        std::cin >> j;
    } else {
        std::ifstream f(path);
        if (!f) throw std::runtime_error("cannot read " + path);
        f >> j;
    }
    Parametrization p = parametrization_from_json(j);
    std::cout << identification_report(p).dump(2) << "\n";
}

void cmd_family(const std::string& kind, int n, int a) {
    Family3 fam;
    if (kind == "torus") fam = Family3::torus;
    else if (kind == "twist") fam = Family3::twist;
    else if (kind == "stevedore") fam = Family3::stevedore;
    else throw CLI::ValidationError("family must be torus, twist or stevedore");

    FamilyInfo info = family(fam, n);
    TwoBridgeKnot k = canonicalize(info.fraction);
    std::cout << kind << " " << n << ": fraction " << info.fraction.str() << ", class " << k.str()
              << ", crossing_number " << crossing_number(k).get_str() << "\n";
    if (a == 3) {
        std::cout << "word: " << info.word.str() << "\n";
        std::cout << "minimal diagram: C(3," << info.minimal_b << ")\n";
    } else {
        ConwayForm form = minimal_conway(k, 4);
        SignSeq4 s;
        for (int v : form.entries) s.e.push_back(v > 0 ? 1 : -1);
        std::cout << "word: " << seq4_to_word(s).str() << "\n";
        std::cout << "diagram: C(4," << form.entries.size() + 1 << ")\n";
    }
    Parametrization p = parametrize(k, a);
    std::cout << "parametrization degrees: (" << p.a << "," << p.b << "," << p.z.degree() << ")\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-bridge knots: continued fractions, harmonic curves, polynomial parametrizations"};
    app.require_subcommand(1);

    std::string frac, mode = "pm", json_out, svg_out, fam_kind, id_path;
    int ha = 0, hb = 0, hc = 0, opt_a = 0, fam_n = 1;

    auto* exp = app.add_subcommand("expand", "sign expansion of a fraction");
    exp->add_option("fraction", frac)->required();
    exp->add_option("--mode", mode)->check(CLI::IsMember({"pm", "abs"}));

    auto* cls = app.add_subcommand("classify", "canonical two-bridge class of a fraction");
    cls->add_option("fraction", frac)->required();

    auto* har = app.add_subcommand("harmonic", "classify the harmonic curve H(a,b,c)");
    har->add_option("a", ha)->required();
    har->add_option("b", hb)->required();
    har->add_option("c", hc)->required();

    auto* ish = app.add_subcommand("is-harmonic", "search for a harmonic representation");
    ish->add_option("fraction", frac)->required();
    ish->add_option("--a", opt_a)->check(CLI::IsMember({3, 4}));

    auto* par = app.add_subcommand("parametrize", "polynomial parametrization of a knot");
    par->add_option("fraction", frac)->required();
    par->add_option("--a", opt_a)->required()->check(CLI::IsMember({3, 4}));
    par->add_option("--json", json_out);
    par->add_option("--svg", svg_out);

    auto* idn = app.add_subcommand("identify", "identify a parametrization JSON file");
    idn->add_option("file", id_path)->required();

    auto* fmy = app.add_subcommand("family", "named knot families");
    fmy->add_option("kind", fam_kind)->required()->check(CLI::IsMember({"torus", "twist", "stevedore"}));
    fmy->add_option("n", fam_n)->required()->check(CLI::PositiveNumber);
    fmy->add_option("--a", opt_a)->check(CLI::IsMember({3, 4}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    }

    try {
        if (*exp) cmd_expand(frac, mode);
        else if (*cls) cmd_classify(frac);
        else if (*har) cmd_harmonic(ha, hb, hc);
        else if (*ish) cmd_is_harmonic(frac, opt_a);
        else if (*par) cmd_parametrize(frac, opt_a, json_out, svg_out);
        else if (*idn) cmd_identify(id_path);
        else if (*fmy) cmd_family(fam_kind, fam_n, opt_a == 0 ? 3 : opt_a);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
