use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub details: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub result: Value,
    pub checks: Vec<Check>,
    /// text printed instead of the summary, e.g. a DOT graph
    #[serde(skip)]
    pub raw: Option<String>,
}

impl Report {
    pub fn new(command: &str, inputs: Value) -> Self {
        Report { command: command.to_string(), inputs, result: Value::Null, checks: Vec::new(), raw: None }
    }

    pub fn check(&mut self, name: impl Into<String>, ok: bool, details: impl Into<String>) -> bool {
        let status = if ok { Status::Pass } else { Status::Fail };
        self.checks.push(Check { name: name.into(), status, details: details.into() });
        ok
    }

    pub fn skip(&mut self, name: impl Into<String>, details: impl Into<String>) {
        self.checks.push(Check { name: name.into(), status: Status::Skip, details: details.into() });
    }

    pub fn failed(&self) -> bool {
        self.checks.iter().any(|c| c.status == Status::Fail)
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            return serde_json::to_string_pretty(self).expect("report serializes");
        }
        if let Some(raw) = &self.raw {
            return raw.trim_end().to_string();
        }
        let mut out = String::new();
        match &self.result {
            Value::Null => {}
            Value::String(s) => out.push_str(s),
            Value::Object(map) => {
                let lines: Vec<String> = map.iter().map(|(k, v)| format!("{k}: {}", compact(v))).collect();
                out.push_str(&lines.join("\n"));
            }
            other => out.push_str(&serde_json::to_string_pretty(other).expect("result serializes")),
        }
        for c in &self.checks {
            if !out.is_empty() {
                out.push('\n');
            }
            let status = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Skip => "skip",
            };
            out.push_str(&format!("{}: {status}", c.name));
            if !c.details.is_empty() {
                out.push_str(&format!(" ({})", c.details));
            }
        }
        out
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => serde_json::to_string(other).expect("value serializes"),
    }
}
