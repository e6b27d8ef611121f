"""
Configurazione centralizzata per la CLI del forcing
"""
import os
from dataclasses import dataclass, field
from dotenv import load_dotenv

# Carica variabili d'ambiente (tutte opzionali)
load_dotenv()

SUBCOMMANDS = ("derive", "forced", "realize", "hasse", "verify")
METHODS = ("derive", "construct", "realize")
FORMATS = ("text", "json", "dot")


@dataclass
class LimitsConfig:
    """Limiti per evitare esecuzioni esponenziali accidentali"""
    max_len_cap: int
    default_max_len: int
    realize_bound: int
    normal_form_bound: int

    @classmethod
    def from_env(cls):
        """Crea configurazione da variabili d'ambiente"""
        return cls(
            max_len_cap=int(os.getenv('FORCING_MAX_LEN_CAP', '14')),
            default_max_len=int(os.getenv('FORCING_DEFAULT_MAX_LEN', '4')),
            realize_bound=int(os.getenv('FORCING_REALIZE_BOUND', '8')),
            normal_form_bound=int(os.getenv('FORCING_NORMAL_FORM_BOUND', '7'))
        )


@dataclass
class OutputConfig:
    """Formato e metodo predefiniti"""
    default_format: str
    default_method: str

    @classmethod
    def from_env(cls):
        """Crea configurazione da variabili d'ambiente"""
        return cls(
            default_format=os.getenv('FORCING_DEFAULT_FORMAT', 'text').lower(),
            default_method=os.getenv('FORCING_DEFAULT_METHOD', 'derive').lower()
        )


@dataclass
class AppConfig:
    """Configurazione completa dell'applicazione"""
    limits: LimitsConfig
    output: OutputConfig
    log_level: str

    @classmethod
    def from_env(cls):
        """Crea configurazione completa da variabili d'ambiente"""
        return cls(
            limits=LimitsConfig.from_env(),
            output=OutputConfig.from_env(),
            log_level=os.getenv('LOG_LEVEL', 'WARNING').upper()
        )

    def validate(self) -> list[str]:
        """Valida la configurazione e restituisce lista di errori"""
        errors = []

        if self.limits.max_len_cap < 0:
            errors.append("FORCING_MAX_LEN_CAP deve essere >= 0")

        if not 0 <= self.limits.default_max_len <= self.limits.max_len_cap:
            errors.append("FORCING_DEFAULT_MAX_LEN deve stare tra 0 e FORCING_MAX_LEN_CAP")

        if self.limits.realize_bound < 0:
            errors.append("FORCING_REALIZE_BOUND deve essere >= 0")

        if self.limits.normal_form_bound < 0:
            errors.append("FORCING_NORMAL_FORM_BOUND deve essere >= 0")

        if self.output.default_format not in FORMATS:
            errors.append(f"FORCING_DEFAULT_FORMAT deve essere uno tra {', '.join(FORMATS)}")

        if self.output.default_method not in METHODS:
            errors.append(f"FORCING_DEFAULT_METHOD deve essere uno tra {', '.join(METHODS)}")

        if self.log_level not in ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'):
            errors.append(f"LOG_LEVEL non valido: {self.log_level}")

        return errors


@dataclass
class CliConfig:
    """Parametri di una singola invocazione della CLI"""
    subcommand: str
    words: list[str] = field(default_factory=list)
    max_len: int = 4
    method: str = 'derive'
    format: str = 'text'
    out: str | None = None
    realize_bound: int | None = None
    normal_form: bool = False

    def validate(self, cap: int) -> list[str]:
        """Valida i parametri e restituisce lista di errori"""
        errors = []

        if self.subcommand not in SUBCOMMANDS:
            errors.append(f"Sottocomando sconosciuto: {self.subcommand}")

        if not 0 <= self.max_len <= cap:
            errors.append(f"--max-len deve stare tra 0 e {cap} (ricevuto {self.max_len})")

        if self.method not in METHODS:
            errors.append(f"--method deve essere uno tra {', '.join(METHODS)}")

        if self.format not in FORMATS:
            errors.append(f"--format deve essere uno tra {', '.join(FORMATS)}")

        if self.realize_bound is not None and self.realize_bound < 0:
            errors.append("--realize-bound deve essere >= 0")

        return errors


# Configurazione globale
config = AppConfig.from_env()
