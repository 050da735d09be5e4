import argparse

from config.constants import CONSTRUCTION_KINDS, OUTPUT_FORMATS, SUBCOMMANDS, SWEEP_KINDS
from config.settings import DEFAULT_FORMAT, DEFAULT_MAX_LEVEL


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--construct", choices=CONSTRUCTION_KINDS, help="Construcao do Γ-set")
    common.add_argument("--monoid", help="Monoide (nome do catalogo ou arquivo JSON)")
    common.add_argument("--pointed-set", help="Conjunto pontuado, ponto base primeiro: '*,a,b'")
    common.add_argument("--subobject", help="Elementos do subobjeto colapsado: '0,3,6'")
    common.add_argument("--table", help="Tabela de hiperoperacao (krasner, sign, f1 ou arquivo)")
    common.add_argument("--file", help="Arquivo JSON de entrada")
    common.add_argument("--algebra", action="store_true", help="Tratar a construcao como 𝔽₁-algebra")
    common.add_argument("--target", help="Monoide (ou anel, com --algebra) de destino")
    common.add_argument("--max-level", type=int, default=DEFAULT_MAX_LEVEL, help="Nivel de truncamento")
    common.add_argument("--guard", type=int, default=None, help="Limite de enumeracao")
    common.add_argument("--format", choices=OUTPUT_FORMATS, default=DEFAULT_FORMAT)
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--timing", action="store_true", help="Incluir a duracao no relatorio")
    common.add_argument("--output", help="Escrever o relatorio neste arquivo")
    common.add_argument("--tuple", help="Elementos do nivel 1: '[1],[2],[2]'")
    common.add_argument("--partition", help="Particao das posicoes: '1,2|3'")
    common.add_argument("--shape", help="Parentizacao das posicoes: '((1,2),3)'")
    common.add_argument("--matrix", help="Matriz inteira, linhas separadas por ';': '4,6;2,2'")
    common.add_argument("--kind", choices=SWEEP_KINDS, default="assoc", help="Tipo de varredura")
    common.add_argument("--verbose", "-v", action="store_true", help="Log detalhado em stderr")
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gammaforge",
        description="Γ-sets, somas multivaloradas e extensao de escalares para Z.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="COMANDO")
    common = _common()
    descriptions = {
        "tensor": "X ⊗ Z (ou A ⊗ Z com --algebra): invariantes e mapa ι",
        "assoc-check": "Compara a soma n-aria com somas iteradas por particao",
        "adjunction": "Verifica a bijecao Hom(X, HM) = Hom(X ⊗ Z, M)",
        "hyperops": "Tabela da soma binaria de um Γ-set ou de uma hiperoperacao",
        "embed-plasma": "Imersao de uma tabela de hiperoperacao como Γ-set",
        "snf": "Forma normal de Smith de uma matriz inteira",
        "validate": "Funtorialidade de um Γ-set construido ou lido",
        "sweep": "Varreduras de propriedades sobre o corpus",
    }
    for name in SUBCOMMANDS:
        subparsers.add_parser(name, parents=[common], help=descriptions[name])
    return parser
