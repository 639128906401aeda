#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "fastadv/classifier.hpp"
#include "fastadv/kernels.hpp"
#include "fastadv/tensor.hpp"

namespace k = fastadv::kernels;

namespace {

std::vector<float> random_vector(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<float> u(-1.0f, 1.0f);
  std::vector<float> v(n);
  for (auto& x : v) x = u(rng);
  return v;
}

// The second convolution of the desk CNN: 16 -> 32 channels, 4x4 stride 2 on 16x16.
k::ConvGeometry desk_conv() {
  return {.in_channels = 16, .in_height = 16, .in_width = 16, .out_channels = 32, .kernel = 4, .stride = 2,
          .padding = 1};
}

template <auto Fn>
void conv_forward(benchmark::State& state) {
  const auto g = desk_conv();
  const auto batch = static_cast<std::size_t>(state.range(0));
  const auto in = random_vector(batch * g.in_size(), 1);
  const auto w = random_vector(g.weight_count(), 2);
  const auto b = random_vector(g.out_channels, 3);
  std::vector<float> out(batch * g.out_size());
  for (auto _ : state) {
    Fn(g, batch, in, w, b, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(batch));
}

template <auto Fn>
void conv_backward_input(benchmark::State& state) {
  const auto g = desk_conv();
  const auto batch = static_cast<std::size_t>(state.range(0));
  const auto grad_out = random_vector(batch * g.out_size(), 1);
  const auto w = random_vector(g.weight_count(), 2);
  std::vector<float> grad_in(batch * g.in_size());
  for (auto _ : state) {
    Fn(g, batch, grad_out, w, grad_in);
    benchmark::DoNotOptimize(grad_in.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(batch));
}

template <auto Fn>
void conv_backward_params(benchmark::State& state) {
  const auto g = desk_conv();
  const auto batch = static_cast<std::size_t>(state.range(0));
  const auto in = random_vector(batch * g.in_size(), 1);
  const auto grad_out = random_vector(batch * g.out_size(), 2);
  std::vector<float> gw(g.weight_count()), gb(g.out_channels);
  for (auto _ : state) {
    Fn(g, batch, in, grad_out, gw, gb);
    benchmark::DoNotOptimize(gw.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(batch));
}

template <auto Fn>
void linear_forward(benchmark::State& state) {
  const std::size_t in_f = 2048, out_f = 48;
  const auto batch = static_cast<std::size_t>(state.range(0));
  const auto in = random_vector(batch * in_f, 1);
  const auto w = random_vector(in_f * out_f, 2);
  const auto b = random_vector(out_f, 3);
  std::vector<float> out(batch * out_f);
  for (auto _ : state) {
    Fn(batch, in_f, out_f, in, w, b, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(batch));
}

// Whole-model input gradient, the inner loop of every attack.
void desk_input_gradient(benchmark::State& state) {
  auto model = fastadv::Classifier::from_architecture("cnn4:3x32x32:10:48", 0);
  const auto batch = static_cast<std::size_t>(state.range(0));
  fastadv::Tensor x(batch, 3 * 32 * 32);
  const auto values = random_vector(x.size(), 4);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = 0.5f + 0.5f * values[i];
  std::vector<int> y(batch);
  for (std::size_t i = 0; i < batch; ++i) y[i] = static_cast<int>(i % 10);
  for (auto _ : state) {
    auto g = model.input_gradient(x, y);
    benchmark::DoNotOptimize(g.values().data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(batch));
}

}  // namespace

BENCHMARK(conv_forward<k::conv2d_forward>)->Name("conv_forward/parallel")->Arg(128);
BENCHMARK(conv_forward<k::reference::conv2d_forward>)->Name("conv_forward/reference")->Arg(128);
BENCHMARK(conv_backward_input<k::conv2d_backward_input>)->Name("conv_backward_input/parallel")->Arg(128);
BENCHMARK(conv_backward_input<k::reference::conv2d_backward_input>)->Name("conv_backward_input/reference")->Arg(128);
BENCHMARK(conv_backward_params<k::conv2d_backward_params>)->Name("conv_backward_params/parallel")->Arg(128);
BENCHMARK(conv_backward_params<k::reference::conv2d_backward_params>)->Name("conv_backward_params/reference")->Arg(128);
BENCHMARK(linear_forward<k::linear_forward>)->Name("linear_forward/parallel")->Arg(128);
BENCHMARK(linear_forward<k::reference::linear_forward>)->Name("linear_forward/reference")->Arg(128);
BENCHMARK(desk_input_gradient)->Arg(128);

BENCHMARK_MAIN();
