#include <gtest/gtest.h>

#include "cqad/config.hpp"
#include "cqad/error.hpp"

using namespace cqad;

namespace {

ConfigError config_error(std::string_view text, std::optional<Experiment> e = std::nullopt)
{
    try {
        parse_config(text, e);
    } catch (const ConfigError& err) {
        return err;
    }
    ADD_FAILURE() << "no ConfigError for:\n" << text;
    return ConfigError("", "", 0);
}

} // namespace

TEST(ParseConfig, MinimalSpectrum)
{
    const RunConfig c = parse_config("experiment = spectrum\ntemperature = 16.5\n");
    EXPECT_EQ(c.experiment, Experiment::Spectrum);
    EXPECT_EQ(c.device.omega_r, 3162.0);
    EXPECT_EQ(c.device.g, 18.5);
    EXPECT_DOUBLE_EQ(c.device.epsilon, c.device.kappa / 20.0);
    EXPECT_TRUE(c.auto_fock_cutoff);
    EXPECT_EQ(c.probe.points, 401);
    EXPECT_DOUBLE_EQ(c.resolved_qubit_freq(), 3162.0);
}

TEST(ParseConfig, CommentsAndWhitespace)
{
    const RunConfig c = parse_config("# header\n\n  experiment=secular  # trailing\ntemperature =98.5\nkappa = 0.4\n",
                                     Experiment::Secular);
    EXPECT_EQ(c.device.temperature, 98.5);
    EXPECT_DOUBLE_EQ(c.device.epsilon, 0.02);
}

TEST(ParseConfig, RangeErrorNamesKey)
{
    const auto e = config_error("experiment = spectrum\ntemperature = 16.5\nkappa = -1\n");
    EXPECT_EQ(e.key(), "kappa");
    EXPECT_EQ(e.line(), 3);
}

TEST(ParseConfig, MissingTemperatureForTempsweep)
{
    const auto e = config_error("experiment = tempsweep\n");
    EXPECT_EQ(e.key(), "temperature");
}

TEST(ParseConfig, Rejections)
{
    EXPECT_EQ(config_error("experiment = spectrum\ntemperature = 1\nbogus = 2\n").key(), "bogus");
    EXPECT_EQ(config_error("experiment = spectrum\ntemperature = 1\ng = 1\ng = 2\n").key(), "g");
    EXPECT_EQ(config_error("experiment = spectrum\ntemperature = abc\n").key(), "temperature");
    EXPECT_EQ(config_error("experiment = spectrum\ntemperature = 1\nfock_cutoff = 3\n").key(), "fock_cutoff");
    EXPECT_EQ(config_error("experiment = spectrum\ntemperature = 1\nqubit_freq = 3000\nflux = 0.1\n").key(), "flux");
    EXPECT_EQ(config_error("experiment = stark\n").key(), "qubit_freq");
    EXPECT_EQ(config_error("experiment = spectrum\ntemperature = 1\n", Experiment::Stark).key(), "experiment");
    EXPECT_EQ(config_error("experiment = nope\n").key(), "experiment");
    EXPECT_EQ(config_error("temperature 16.5\n").line(), 1);
}

TEST(ParseConfig, TempsweepList)
{
    const RunConfig c = parse_config("temperature = 16.5, 98.5 ,349\nfock_cutoff = 12\n", Experiment::Tempsweep);
    EXPECT_EQ(c.temperatures, (std::vector<double>{16.5, 98.5, 349.0}));
    EXPECT_FALSE(c.auto_fock_cutoff);
    EXPECT_EQ(c.device.fock_cutoff, 12);
}

TEST(ParseConfig, FluxResolvesQubit)
{
    const RunConfig c = parse_config("experiment = stark\nflux = 0\n");
    EXPECT_NEAR(c.resolved_qubit_freq(), 5251.7, 0.1);
    EXPECT_GT(c.drive.points, 1);
}

TEST(Serialize, RoundTrip)
{
    const char* docs[] = {
        "experiment = spectrum\ntemperature = 16.5\ngamma_q = 7.9\nprobe_points = 7\n",
        "experiment = anticrossing\ntemperature = 16.5\nflux_points = 5\nthreads = 3\n",
        "experiment = tempsweep\ntemperature = 16.5, 50.5, 349\nepsilon = 0.0123456789012345\n",
        "experiment = stark\nqubit_freq = 4444.125\nextinction = 0.7\npower_points = 3\n",
        "experiment = dressed\nn_max = 9\noutput = lines.csv\n",
    };
    for (const char* doc : docs) {
        const RunConfig c = parse_config(doc);
        const RunConfig back = parse_config(serialize(c));
        EXPECT_EQ(back, c) << doc << "\n---\n" << serialize(c);
    }
}

TEST(LoadConfig, MissingFile)
{
    EXPECT_THROW(load_config("/nonexistent/run.cfg"), IoError);
}

TEST(ParseConfig, DecoupledAllowed)
{
    EXPECT_EQ(parse_config("experiment = spectrum\ntemperature = 0\ng = 0\n").device.g, 0.0);
    EXPECT_EQ(config_error("experiment = spectrum\ntemperature = 0\ng = -1\n").key(), "g");
}
