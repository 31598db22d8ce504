from .crossover import crossover_bits, crossover_graphs, crossover_spectral, mutate
from .encoding import bits_to_str, decode_bits, encode_bits
from .ga import CliqueOrderFitness, GeneticAlgorithm, random_search, run_ga

__all__ = [
    "CliqueOrderFitness",
    "GeneticAlgorithm",
    "bits_to_str",
    "crossover_bits",
    "crossover_graphs",
    "crossover_spectral",
    "decode_bits",
    "encode_bits",
    "mutate",
    "random_search",
    "run_ga",
]
