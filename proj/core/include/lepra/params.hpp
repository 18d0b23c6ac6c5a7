#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lepra {

enum class ParamsPreset { table, simulation };

std::string_view to_string(ParamsPreset p);
ParamsPreset params_preset_from_string(std::string_view s);

/// Model constants. Field names double as the keys of the flat
/// key-value config format.
struct Params {
    // pharmacokinetics
    double V1 = 25.0;   // plasma volume [L]
    double V2 = 20.0;   // effect-site volume [L]
    double k12 = 0.4;   // plasma -> site transfer [1/day]
    double k1 = 1.6;    // plasma elimination [1/day]
    double k2 = 0.8;    // site elimination [1/day]

    // drug action
    double mu_d1 = 1.0;   // delayed toxicity, rifampin [1/(day·conc)]
    double mu_d2 = 3.81;  // delayed toxicity, dapsone
    double mu_d3 = 7.1;   // delayed toxicity, clofazimine
    double k_d1 = 0.26;   // kill rate, rifampin [1/(day·conc)]
    double k_d2 = 0.99;   // kill rate, dapsone
    double k_d3 = 1.85;   // kill rate, clofazimine
    double eta = 0.01;    // bacteria per infected cell
    double C_min = 0.0;   // minimum effective site concentration [mg/L]
    double tau_d = 0.0;   // toxicity delay [day]
    double tau = 30.0;    // second-dosage delay [day]

    // cell and bacteria dynamics
    double omega = 0.0220;  // Schwann cell birth rate
    double beta = 3.4400;   // infection rate
    double gamma = 0.1795;  // cytokine-induced susceptible death rate
    double mu1 = 0.0018;    // natural Schwann death rate
    double delta = 0.2681;  // cytokine-induced infected death rate
    double alpha = 0.0630;  // bacterial burst rate
    double y = 0.0003;      // cytokine bacterial clearance rate
    double mu2 = 0.5700;    // bacterial natural death rate

    // cytokine production / inhibition / decay / baselines
    double alpha_Ig = 0.0003;
    double beta_Ta = 0.0040;
    double alpha_I10 = 0.0440;
    double beta_I12 = 0.0110;
    double beta_I15 = 0.0250;
    double beta_I17 = 0.0290;
    double d_Ta_Ig = 0.005540;
    double d_I12_Ig = 0.009030;
    double d_I15_Ig = 0.006250;
    double d_I17_Ig = 0.004990;
    double d_Ig_I10 = 0.001460;
    double mu_Ig = 2.1600;
    double mu_Ta = 1.1120;
    double mu_I10 = 16.000;
    double mu_I12 = 1.8800;
    double mu_I15 = 2.1600;
    double mu_I17 = 2.3400;
    double Q_Ig = 0.1000;
    double Q_Ta = 0.1400;
    double Q_I10 = 0.1500;
    double Q_I12 = 1.1100;
    double Q_I15 = 0.2000;
    double Q_I17 = 0.3170;

    double mu_d_sum() const { return mu_d1 + mu_d2 + mu_d3; }
    double k_d_sum() const { return k_d1 + k_d2 + k_d3; }

    /// Throws std::invalid_argument naming the offending field.
    void validate() const;

    double get(std::string_view key) const;
    void set(std::string_view key, double value);
    static const std::vector<std::string>& keys();

    static Params preset(ParamsPreset p);
};

/// Flat "key = value" serialization, one field per line, keys as above.
std::string params_to_config(const Params& p);
Params params_from_config(std::istream& in);
Params params_from_config_string(const std::string& text);

}  // namespace lepra
