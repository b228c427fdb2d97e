"""Motor de fórmulas proposicionales, conversión a CNF y núcleo SAT."""
