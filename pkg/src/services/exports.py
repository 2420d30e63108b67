"""
DOT export of enumerated MB structures
"""
from collections.abc import Iterable

from .enumeration import MbStructureKey, classify_roles


class DotExportService:
    """Graphviz rendering of MB structures, nodes named by role"""

    def render_block(self, key: MbStructureKey, index: int) -> str:
        """
        DOT digraph for one structure

        Nodes are named by role letter and index (T0, P1, C2, S3, O4).
        """
        roles = classify_roles(key.to_digraph())
        names = {node: f"{role.letter}{node}" for node, role in roles.items()}

        lines = [f"digraph mb_{index} {{"]
        lines.extend(f"  {names[node]};" for node in range(key.n))
        lines.extend(f"  {names[source]} -> {names[dest]};" for source, dest in key.edges)
        lines.append("}")
        return "\n".join(lines) + "\n"

    def render(self, keys: Iterable[MbStructureKey]) -> str:
        return "".join(self.render_block(key, index) for index, key in enumerate(keys, 1))


# Singleton
dot_export_service = DotExportService()
