// MAIN-1: the exponent table against its stated values.
#include <cmath>

#include "common.hpp"
#include "fflab/harness/runner.hpp"

namespace fflab::harness {

namespace {

struct Expected {
    const char* label_part;
    double value;
    const char* rendered;
};

const Expected kExpected[] = {
    {"d=3 conjectured", 3.0, "3"},
    {"d=3 Stein-Tomas", 4.0, "4"},
    {"d=5 conjectured", 2.5, "5/2"},
    {"d=5 Stein-Tomas", 3.0, "3"},
    {"delta_3", 0.4, "4/10"},
    {"p = 4 - delta_3", 3.6, "18/5"},
    {"sharp q", 2.25, "9/4"},
    {"delta_5", 1.0 / 16.0, "1/16"},
    {"below", 47.0 / 31.0, "47/31"},
};

Scenario main1() {
    auto s = make("MAIN-1", "exponent table of the finite field restriction problem", Kind::exponent_arith, {3}, {3}, 1);
    s.run = [](const Context&) {
        auto rows = exponent_table();
        auto text = render_table(rows);
        Outcome o;
        for (const auto& e : kExpected) {
            const TableRow* hit = nullptr;
            for (const auto& r : rows)
                if (!hit && !r.measured && r.label.find(e.label_part) != std::string::npos) hit = &r;
            double dev = 1.0;
            bool shown = false;
            if (hit) {
                dev = std::abs(hit->numeric - e.value);
                shown = hit->value.rfind(e.rendered, 0) == 0 && text.find(hit->value) != std::string::npos;
            }
            if (!shown) dev = std::max(dev, 1.0);
            o.details[e.label_part] = {{"value", hit ? hit->value : "missing"}, {"expected", e.rendered}};
            o.metric = std::max(o.metric, dev);
        }
        int measured = 0;
        for (const auto& r : rows) measured += r.measured;
        o.details["measured_rows"] = measured;
        if (measured == 0) o.metric = std::max(o.metric, 1.0);
        return o;
    };
    return s;
}

}  // namespace

void add_misc_scenarios(std::vector<Scenario>& out) { out.push_back(main1()); }

} // namespace fflab::harness
