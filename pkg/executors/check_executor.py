from pathlib import Path

from verifiers import Verifier


class CheckExecutor:
    def __init__(
        self,
        verifier: Verifier,
        work_dir: Path | None = None,
    ) -> None:
        self.verifier = verifier
        self.work_dir = work_dir

    def execute(self) -> bool:
        """Executa as verificações, imprime o resumo e grava o relatório XML quando há diretório."""
        # executa as verificações
        self.verifier.run()
        print(self.verifier.summary())

        # grava o arquivo de relatório
        if self.work_dir is not None:
            self.work_dir.mkdir(parents=True, exist_ok=True)
            report_path = self.work_dir / f"{self.verifier.name}_report.xml"
            with open(report_path, "w", encoding="utf-8") as f:
                f.write('<?xml version="1.0" encoding="utf-8"?>\n')
                f.write(self.verifier.generate_report())
            print(f"Arquivo de relatório gerado em {report_path}")

        return self.verifier.passed
