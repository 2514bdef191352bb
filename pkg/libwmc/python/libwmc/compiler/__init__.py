from libwmc.compiler.compiler import CompileStats, Compiler, compile
from libwmc.compiler.config import CompileConfig, Heuristic, NegationMode
from libwmc.diagrams.operations import restrict_diagram


__all__ = [
        'CompileConfig', 'CompileStats', 'Compiler', 'Heuristic',
        'NegationMode', 'compile', 'restrict_diagram']
